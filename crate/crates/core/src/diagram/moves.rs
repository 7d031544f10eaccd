//! Reidemeister I and II insertions.

use super::{CrossingJson, Diagram, DiagramJson, Orient, Side};
use crate::error::{Error, Result};

struct Draft {
    rots: Vec<([u32; 4], i8)>,
    loops: Vec<u32>,
    json: DiagramJson,
}

impl Draft {
    fn of(d: &Diagram) -> Self {
        let json = d.to_json();
        let rots = d.crossings.iter().map(|x| (x.slots.map(|a| d.labels[a]), x.sign)).collect();
        Draft { rots, loops: json.loops.clone(), json }
    }

    /// Points the incoming end of `semiarc` at `label` instead. Free loops have
    /// no incoming end and are dropped from the loop list, since they close up
    /// through new crossings.
    fn retarget_head(&mut self, d: &Diagram, semiarc: usize, label: u32) {
        match d.head[semiarc] {
            Some((c, s)) => self.rots[c].0[s] = label,
            None => self.loops.retain(|&l| l != d.labels[semiarc]),
        }
    }

    fn finish(self) -> Result<Diagram> {
        let crossings = self
            .rots
            .iter()
            .map(|&(rot, sign)| {
                let mut o = [Orient::In, Orient::In, Orient::Out, Orient::In];
                o[if sign > 0 { 1 } else { 3 }] = Orient::Out;
                CrossingJson { rot, over: 1, orients: Some(o) }
            })
            .collect();
        Diagram::from_json(DiagramJson { crossings, loops: self.loops, ..self.json })
    }
}

/// Adds a kink with a crossing of sign `sign` to semi-arc `label`, its lobe on
/// the given side.
pub fn r1_insert(d: &Diagram, label: u32, sign: i8, side: Side) -> Result<Diagram> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidMove(format!("sign must be 1 or -1, got {sign}")));
    }
    let e = d.semiarc_index(label).map_err(|_| Error::InvalidMove(format!("no semi-arc {label}")))?;
    let lobe = d.max_label() + 1;
    let free = d.head[e].is_none();
    let rest = if free { label } else { d.max_label() + 2 };
    let mut draft = Draft::of(d);
    draft.retarget_head(d, e, rest);
    let rot = match (side, sign) {
        (Side::Left, 1) => [label, rest, lobe, lobe],
        (Side::Right, -1) => [label, lobe, lobe, rest],
        (Side::Left, _) => [lobe, label, rest, lobe],
        (Side::Right, _) => [lobe, lobe, rest, label],
    };
    draft.rots.push((rot, sign));
    draft.finish()
}

/// Pushes a finger of semi-arc `over` across semi-arc `under` through a
/// region they share, creating two crossings of opposite signs. With
/// `sides = None` the first shared region in the order
/// (left, left), (left, right), (right, left), (right, right) is used.
pub fn r2_insert(d: &Diagram, over: u32, under: u32, sides: Option<(Side, Side)>) -> Result<Diagram> {
    let e1 = d.semiarc_index(over).map_err(|_| Error::InvalidMove(format!("no semi-arc {over}")))?;
    let e2 = d.semiarc_index(under).map_err(|_| Error::InvalidMove(format!("no semi-arc {under}")))?;
    if e1 == e2 {
        return Err(Error::InvalidMove("a semi-arc cannot pass over itself".into()));
    }
    let shared = |s1: Side, s2: Side| d.region_of[e1][s1.bit()] == d.region_of[e2][s2.bit()];
    let candidates = [(Side::Left, Side::Left), (Side::Left, Side::Right), (Side::Right, Side::Left), (Side::Right, Side::Right)];
    let (s1, s2) = match sides {
        Some((s1, s2)) if shared(s1, s2) => (s1, s2),
        Some((s1, s2)) => {
            return Err(Error::InvalidMove(format!("{over}:{s1} and {under}:{s2} do not border a common region")))
        }
        None => *candidates
            .iter()
            .find(|&&(s1, s2)| shared(s1, s2))
            .ok_or_else(|| Error::InvalidMove(format!("semi-arcs {over} and {under} do not border a common region")))?,
    };

    let mut fresh = d.max_label();
    let mut new_label = || {
        fresh += 1;
        fresh
    };
    let e1b = new_label();
    let e1c = if d.head[e1].is_none() { over } else { new_label() };
    let e2b = new_label();
    let e2c = if d.head[e2].is_none() { under } else { new_label() };

    let mut draft = Draft::of(d);
    draft.retarget_head(d, e1, e1c);
    draft.retarget_head(d, e2, e2c);

    // Local picture: `under` runs north along x = 0 and the shared region lies
    // on side `sigma` of it. The finger crosses at heights 1 and 2.
    let sigma: i8 = if s2 == Side::Left { -1 } else { 1 };
    let north = (s1 == Side::Left) == (sigma == 1);
    let (first_y, second_y) = if north { (1, 2) } else { (2, 1) };
    let crossing = |y: u8, h: i8, inc: u32, out: u32| {
        let (south, north) = if y == 1 { (under, e2b) } else { (e2b, e2c) };
        let (east, west) = if h > 0 { (out, inc) } else { (inc, out) };
        ([south, east, north, west], h)
    };
    draft.rots.push(crossing(first_y, -sigma, over, e1b));
    draft.rots.push(crossing(second_y, sigma, e1b, e1c));

    let (p1, p2) = (d.piece_of[e1], d.piece_of[e2]);
    if p1 != p2 {
        let piece_of_label = |l: u32| d.semiarc_index(l).map(|a| d.piece_of[a]).ok();
        let placement_of = |p: usize| {
            draft.json.placements.iter().position(|pl| piece_of_label(pl.outer.semiarc) == Some(p)).expect("split pieces are placed")
        };
        let (i1, i2) = (placement_of(p1), placement_of(p2));
        let inside_piece = |i: usize| draft.json.placements[i].inside.and_then(|x| piece_of_label(x.semiarc));
        let drop = if inside_piece(i1) == Some(p2) { i1 } else { i2 };
        draft.json.placements.remove(drop);
    }
    draft.finish()
}
