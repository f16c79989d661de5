//! Oriented link diagrams in planar-diagram form.
//!
//! Every crossing has four ports, numbered `4c + role`:
//!
//! | role | port      |
//! |------|-----------|
//! | 0    | in-over   |
//! | 1    | out-over  |
//! | 2    | in-under  |
//! | 3    | out-under |
//!
//! Arcs pair each out-port with exactly one in-port. Crossing-free
//! components are kept as a count of free loops. The cyclic order of ports
//! around a crossing is fixed by its sign, which makes the diagram a planar
//! map whose faces can be traced.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Sign};
use crate::error::DiagramError;

pub type Port = u32;

pub const IN_OVER: u32 = 0;
pub const OUT_OVER: u32 = 1;
pub const IN_UNDER: u32 = 2;
pub const OUT_UNDER: u32 = 3;

#[inline]
pub fn crossing_of(p: Port) -> usize {
    (p >> 2) as usize
}

#[inline]
pub fn role_of(p: Port) -> u32 {
    p & 3
}

#[inline]
fn port(c: usize, role: u32) -> Port {
    (c as u32) << 2 | role
}

#[inline]
fn is_in(p: Port) -> bool {
    p & 1 == 0
}

/// Ports around a crossing, counterclockwise, starting from out-over.
fn rotation(sign: Sign) -> [u32; 4] {
    match sign {
        Sign::Pos => [OUT_OVER, OUT_UNDER, IN_OVER, IN_UNDER],
        Sign::Neg => [OUT_OVER, IN_UNDER, IN_OVER, OUT_UNDER],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    signs: Vec<Sign>,
    link: Vec<Port>,
    free_loops: usize,
    /// In-ports whose components are labeled first, in this order.
    seeds: Vec<Port>,
}

/// What happens to a strand entering a crossing that is being removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Keep,
    /// in-over → out-under, in-under → out-over.
    Smooth,
    /// in-X → out-X.
    PassThrough,
    /// The strand entering at this role disappears; the other passes through.
    DropOver,
    DropUnder,
    DropBoth,
}

impl Route {
    fn through(self, role: u32) -> Option<u32> {
        match (self, role) {
            (Route::Keep, _) => None,
            (Route::Smooth, IN_OVER) => Some(OUT_UNDER),
            (Route::Smooth, IN_UNDER) => Some(OUT_OVER),
            (Route::PassThrough, IN_OVER) => Some(OUT_OVER),
            (Route::PassThrough, IN_UNDER) => Some(OUT_UNDER),
            (Route::DropOver, IN_UNDER) => Some(OUT_UNDER),
            (Route::DropUnder, IN_OVER) => Some(OUT_OVER),
            _ => None,
        }
    }
}

/// Component labels for a diagram. Components carrying crossings come first
/// in seed order, then in crossing order; free loops take the last labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    over: Vec<usize>,
    under: Vec<usize>,
    starts: Vec<Port>,
    free_loops: usize,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.starts.len() + self.free_loops
    }

    pub fn traced(&self) -> usize {
        self.starts.len()
    }

    pub fn starts(&self) -> &[Port] {
        &self.starts
    }

    pub fn over(&self, c: usize) -> usize {
        self.over[c]
    }

    pub fn under(&self, c: usize) -> usize {
        self.under[c]
    }

    pub fn of_port(&self, p: Port) -> usize {
        if role_of(p) < 2 {
            self.over[crossing_of(p)]
        } else {
            self.under[crossing_of(p)]
        }
    }
}

/// Symmetric matrix of pairwise linking numbers with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zeros(size: usize) -> LinkingMatrix {
        LinkingMatrix {
            size,
            entries: vec![0; size * size],
        }
    }

    /// Builds a matrix from the upper triangle, row by row:
    /// `(0,1), (0,2), …, (1,2), …`.
    pub fn from_upper(size: usize, upper: &[i64]) -> LinkingMatrix {
        assert_eq!(upper.len(), size * size.saturating_sub(1) / 2);
        let mut m = LinkingMatrix::zeros(size);
        let mut it = upper.iter();
        for i in 0..size {
            for j in i + 1..size {
                m.set(i, j, *it.next().unwrap());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert_ne!(i, j, "diagonal stays zero");
        self.entries[i * self.size + j] = v;
        self.entries[j * self.size + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[i64]>::to_vec).collect()
    }
}

/// Assembles a diagram strand by strand.
struct Builder {
    signs: Vec<Sign>,
    link: Vec<Port>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            signs: Vec::new(),
            link: Vec::new(),
        }
    }

    fn crossing(&mut self, sign: Sign) -> usize {
        self.signs.push(sign);
        self.link.extend([u32::MAX; 4]);
        self.signs.len() - 1
    }

    fn join(&mut self, out: Port, into: Port) {
        debug_assert!(!is_in(out) && is_in(into));
        self.link[out as usize] = into;
        self.link[into as usize] = out;
    }
}

/// Tracks the loose end of every braid position while letters are laid down.
struct StrandEnds {
    first_in: Vec<Option<Port>>,
    open: Vec<Option<Port>>,
    origin: Vec<usize>,
}

impl StrandEnds {
    fn new(n: usize) -> StrandEnds {
        StrandEnds {
            first_in: vec![None; n],
            open: vec![None; n],
            origin: (0..n).collect(),
        }
    }

    /// The strand at `pos` enters `into` and leaves through `out`.
    fn pass(&mut self, b: &mut Builder, pos: usize, into: Port, out: Port) {
        match self.open[pos] {
            Some(prev) => b.join(prev, into),
            None => self.first_in[self.origin[pos]] = Some(into),
        }
        self.open[pos] = Some(out);
    }

    fn swap(&mut self, i: usize) {
        self.open.swap(i, i + 1);
        self.origin.swap(i, i + 1);
    }

    /// Joins bottom position `k` to top position `k`; returns the number of
    /// crossing-free strands, which close to free loops.
    fn close(self, b: &mut Builder) -> usize {
        let mut loops = 0;
        for k in 0..self.open.len() {
            match (self.open[k], self.first_in[k]) {
                (Some(out), Some(into)) => b.join(out, into),
                (None, None) => loops += 1,
                _ => unreachable!("a strand with crossings ends where one starts"),
            }
        }
        loops
    }
}

fn braid_diagram(w: &BraidWord, with_axis: bool) -> LinkDiagram {
    let n = w.strands();
    let mut b = Builder::new();
    let mut ends = StrandEnds::new(n);
    let mut seeds = Vec::new();
    let mut axis_seed = None;

    if with_axis {
        // The axis runs left to right under every strand, then right to left
        // over every strand. With strands oriented downward both crossings
        // with each strand are positive, so every strand links the axis once.
        let top: Vec<usize> = (0..n).map(|_| b.crossing(Sign::Pos)).collect();
        let bottom: Vec<usize> = (0..n).map(|_| b.crossing(Sign::Pos)).collect();
        for k in 0..n {
            ends.pass(&mut b, k, port(top[k], IN_OVER), port(top[k], OUT_OVER));
            ends.pass(&mut b, k, port(bottom[k], IN_UNDER), port(bottom[k], OUT_UNDER));
        }
        for k in 0..n - 1 {
            b.join(port(top[k], OUT_UNDER), port(top[k + 1], IN_UNDER));
        }
        b.join(port(top[n - 1], OUT_UNDER), port(bottom[n - 1], IN_OVER));
        for k in (1..n).rev() {
            b.join(port(bottom[k], OUT_OVER), port(bottom[k - 1], IN_OVER));
        }
        b.join(port(bottom[0], OUT_OVER), port(top[0], IN_UNDER));
        axis_seed = Some(port(top[0], IN_UNDER));
    }

    for l in w.letters() {
        let i = l.index() - 1;
        let c = b.crossing(l.sign());
        // The strand moving left (from i + 1) is over in a positive crossing.
        let (left_mover, right_mover) = match l.sign() {
            Sign::Pos => ((IN_OVER, OUT_OVER), (IN_UNDER, OUT_UNDER)),
            Sign::Neg => ((IN_UNDER, OUT_UNDER), (IN_OVER, OUT_OVER)),
        };
        ends.pass(&mut b, i, port(c, right_mover.0), port(c, right_mover.1));
        ends.pass(&mut b, i + 1, port(c, left_mover.0), port(c, left_mover.1));
        ends.swap(i);
    }

    for k in 0..n {
        if let Some(p) = ends.first_in[k] {
            seeds.push(p);
        }
    }
    seeds.extend(axis_seed);
    let free_loops = ends.close(&mut b);
    LinkDiagram {
        signs: b.signs,
        link: b.link,
        free_loops,
        seeds,
    }
}

impl LinkDiagram {
    /// The `u`-component unlink with no crossings.
    pub fn unlink(u: usize) -> LinkDiagram {
        LinkDiagram {
            signs: Vec::new(),
            link: Vec::new(),
            free_loops: u,
            seeds: Vec::new(),
        }
    }

    /// Closed braid: one crossing per letter, bottom position `k` joined to
    /// top position `k`.
    pub fn closure(w: &BraidWord) -> LinkDiagram {
        braid_diagram(w, false)
    }

    /// Closed braid together with its axis. The axis is labeled last and
    /// links each braid component once per strand.
    pub fn axis_link(w: &BraidWord) -> LinkDiagram {
        braid_diagram(w, true)
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn sign(&self, c: usize) -> Sign {
        self.signs[c]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// The in-port reached after leaving `c` through the out-port of role
    /// `role`.
    #[inline]
    pub fn next_in(&self, p: Port) -> Port {
        self.link[(p ^ 1) as usize]
    }

    #[inline]
    pub fn partner(&self, p: Port) -> Port {
        self.link[p as usize]
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        if self.link.len() != 4 * self.signs.len() {
            return Err(DiagramError::Inconsistent("port table size".into()));
        }
        for (p, &q) in self.link.iter().enumerate() {
            let p = p as Port;
            if q as usize >= self.link.len() {
                return Err(DiagramError::Inconsistent(format!("port {p} is unpaired")));
            }
            if self.link[q as usize] != p {
                return Err(DiagramError::Inconsistent(format!("port {p} pairing is not mutual")));
            }
            if is_in(p) == is_in(q) {
                return Err(DiagramError::Inconsistent(format!(
                    "port {p} joins two ports of the same direction"
                )));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> ComponentLabeling {
        let nc = self.signs.len();
        let mut over = vec![usize::MAX; nc];
        let mut under = vec![usize::MAX; nc];
        let mut starts = Vec::new();
        let candidates = self
            .seeds
            .iter()
            .copied()
            .chain((0..nc).flat_map(|c| [port(c, IN_OVER), port(c, IN_UNDER)]));
        for start in candidates {
            let slot = |p: Port| {
                if role_of(p) == IN_OVER {
                    over[crossing_of(p)]
                } else {
                    under[crossing_of(p)]
                }
            };
            if slot(start) != usize::MAX {
                continue;
            }
            let label = starts.len();
            starts.push(start);
            let mut p = start;
            loop {
                if role_of(p) == IN_OVER {
                    over[crossing_of(p)] = label;
                } else {
                    under[crossing_of(p)] = label;
                }
                p = self.next_in(p);
                if p == start {
                    break;
                }
            }
        }
        ComponentLabeling {
            over,
            under,
            starts,
            free_loops: self.free_loops,
        }
    }

    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    /// Visits each component from its start, yielding `(crossing, over)`
    /// for every passage in traversal order.
    pub fn traversal(&self, labels: &ComponentLabeling) -> Vec<(usize, bool)> {
        let mut out = Vec::with_capacity(2 * self.signs.len());
        for &start in labels.starts() {
            let mut p = start;
            loop {
                out.push((crossing_of(p), role_of(p) == IN_OVER));
                p = self.next_in(p);
                if p == start {
                    break;
                }
            }
        }
        out
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let labels = self.components();
        self.linking_matrix_with(&labels)
    }

    pub fn linking_matrix_with(&self, labels: &ComponentLabeling) -> LinkingMatrix {
        let mut m = LinkingMatrix::zeros(labels.count());
        let mut twice = vec![0i64; labels.count() * labels.count()];
        for (c, s) in self.signs.iter().enumerate() {
            let (a, b) = (labels.over[c], labels.under[c]);
            if a != b {
                twice[a * labels.count() + b] += s.value();
                twice[b * labels.count() + a] += s.value();
            }
        }
        for i in 0..labels.count() {
            for j in i + 1..labels.count() {
                m.set(i, j, twice[i * labels.count() + j] / 2);
            }
        }
        m
    }

    /// True when, after [`LinkDiagram::simplify`], the components fall into
    /// more than one group with no crossings between groups.
    pub fn is_split(&self) -> bool {
        let d = self.simplify();
        let labels = d.components();
        d.is_split_with(&labels)
    }

    pub fn is_split_with(&self, labels: &ComponentLabeling) -> bool {
        let p = labels.count();
        if p <= 1 {
            return false;
        }
        if labels.free_loops > 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..p).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut groups = p;
        for c in 0..self.signs.len() {
            let (a, b) = (find(&mut parent, labels.over[c]), find(&mut parent, labels.under[c]));
            if a != b {
                parent[a] = b;
                groups -= 1;
            }
        }
        groups > 1
    }

    fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.signs.len() {
            Ok(())
        } else {
            Err(DiagramError::NoSuchCrossing(c))
        }
    }

    /// Flips the sign and exchanges the over and under strands at `c`.
    pub fn switch_in_place(&mut self, c: usize) {
        let swap = |p: Port| -> Port {
            if crossing_of(p) == c {
                p ^ 2
            } else {
                p
            }
        };
        let pairs: Vec<(Port, Port)> = (0..4)
            .map(|r| {
                let p = port(c, r);
                (swap(p), swap(self.link[p as usize]))
            })
            .collect();
        for (a, b) in pairs {
            self.link[a as usize] = b;
            self.link[b as usize] = a;
        }
        for s in &mut self.seeds {
            *s = swap(*s);
        }
        self.signs[c] = self.signs[c].flip();
    }

    pub fn switch_crossing(&self, c: usize) -> Result<LinkDiagram, DiagramError> {
        self.check_crossing(c)?;
        let mut d = self.clone();
        d.switch_in_place(c);
        Ok(d)
    }

    /// Oriented smoothing at `c`.
    pub fn smooth_crossing(&self, c: usize) -> Result<LinkDiagram, DiagramError> {
        self.check_crossing(c)?;
        let mut routes = vec![Route::Keep; self.signs.len()];
        routes[c] = Route::Smooth;
        Ok(self.contract(&routes, 0))
    }

    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        for c in 0..d.signs.len() {
            d.switch_in_place(c);
        }
        d
    }

    /// Removes component `label` (as numbered by [`LinkDiagram::components`]).
    /// Crossings it shared with other components are retracted, leaving the
    /// surviving strand to pass straight through.
    pub fn delete_component(&self, label: usize) -> Result<LinkDiagram, DiagramError> {
        let labels = self.components();
        if label >= labels.count() {
            return Err(DiagramError::NoSuchComponent(label));
        }
        if label >= labels.traced() {
            let mut d = self.clone();
            d.free_loops -= 1;
            return Ok(d);
        }
        let routes: Vec<Route> = (0..self.signs.len())
            .map(|c| match (labels.over[c] == label, labels.under[c] == label) {
                (true, true) => Route::DropBoth,
                (true, false) => Route::DropOver,
                (false, true) => Route::DropUnder,
                (false, false) => Route::Keep,
            })
            .collect();
        Ok(self.contract(&routes, 0))
    }

    /// Removes every crossing whose route is not `Keep`, reconnecting strands
    /// through the removed crossings. `spare_loops` closed loops produced by
    /// the removal are discarded instead of being counted as free loops.
    fn contract(&self, routes: &[Route], spare_loops: usize) -> LinkDiagram {
        let nc = self.signs.len();
        let mut renumber = vec![usize::MAX; nc];
        let mut signs = Vec::with_capacity(nc);
        for c in 0..nc {
            if routes[c] == Route::Keep {
                renumber[c] = signs.len();
                signs.push(self.signs[c]);
            }
        }
        let new_port = |p: Port| port(renumber[crossing_of(p)], role_of(p));
        // Follows a strand from in-port `p` through removed crossings. Returns
        // the first kept in-port, or `None` if the strand is dropped or only
        // loops through removed crossings.
        let mut visited = vec![false; 4 * nc];
        let follow = |mut p: Port, visited: &mut Vec<bool>| -> Option<Port> {
            loop {
                let c = crossing_of(p);
                if routes[c] == Route::Keep {
                    return Some(p);
                }
                if visited[p as usize] {
                    return None;
                }
                visited[p as usize] = true;
                let out = routes[c].through(role_of(p))?;
                p = self.link[port(c, out) as usize];
            }
        };

        let mut link = vec![u32::MAX; 4 * signs.len()];
        for c in 0..nc {
            if routes[c] != Route::Keep {
                continue;
            }
            for out_role in [OUT_OVER, OUT_UNDER] {
                let from = port(c, out_role);
                let to = follow(self.link[from as usize], &mut visited)
                    .expect("a kept strand reaches a kept crossing");
                let (a, b) = (new_port(from), new_port(to));
                link[a as usize] = b;
                link[b as usize] = a;
            }
        }

        // Anything still unvisited on a surviving route lies on a loop with no
        // kept crossings.
        let mut loops = 0usize;
        for c in 0..nc {
            if routes[c] == Route::Keep {
                continue;
            }
            for in_role in [IN_OVER, IN_UNDER] {
                let p = port(c, in_role);
                if visited[p as usize] || routes[c].through(in_role).is_none() {
                    continue;
                }
                let mut q = p;
                while !visited[q as usize] {
                    visited[q as usize] = true;
                    let out = routes[crossing_of(q)]
                        .through(role_of(q))
                        .expect("loops stay on surviving routes");
                    q = self.link[port(crossing_of(q), out) as usize];
                }
                loops += 1;
            }
        }

        let mut seen_seed = vec![false; 4 * nc];
        let seeds = self
            .seeds
            .iter()
            .filter_map(|&s| {
                let mut p = s;
                loop {
                    let c = crossing_of(p);
                    if routes[c] == Route::Keep {
                        return Some(new_port(p));
                    }
                    if seen_seed[p as usize] {
                        return None;
                    }
                    seen_seed[p as usize] = true;
                    let out = routes[c].through(role_of(p))?;
                    p = self.link[port(c, out) as usize];
                }
            })
            .collect::<Vec<_>>();

        LinkDiagram {
            signs,
            link,
            free_loops: self.free_loops + loops - spare_loops,
            seeds,
        }
    }

    fn is_kink(&self, c: usize) -> bool {
        self.link[port(c, OUT_OVER) as usize] == port(c, IN_UNDER)
            || self.link[port(c, OUT_UNDER) as usize] == port(c, IN_OVER)
    }

    fn cw_next(&self, p: Port) -> Port {
        let rot = rotation(self.signs[crossing_of(p)]);
        let i = rot.iter().position(|&r| r == role_of(p)).unwrap();
        port(crossing_of(p), rot[(i + 3) % 4])
    }

    /// Whether the arcs `a1–b1` and `a2–b2` (with `a*` at one crossing and
    /// `b*` at another) bound a bigon face.
    fn bounds_bigon(&self, a1: Port, b1: Port, a2: Port, b2: Port) -> bool {
        (self.cw_next(b1) == b2 && self.cw_next(a2) == a1)
            || (self.cw_next(b2) == b1 && self.cw_next(a1) == a2)
    }

    /// A pair of crossings cancelled by a second Reidemeister move.
    fn find_clasp(&self) -> Option<(usize, usize)> {
        for c in 0..self.signs.len() {
            let oo = port(c, OUT_OVER);
            let next = self.link[oo as usize];
            let d = crossing_of(next);
            if d == c || role_of(next) != IN_OVER || self.signs[c] == self.signs[d] {
                continue;
            }
            // Under strands run alongside, either in the same direction or
            // against it.
            let parallel = self.link[port(c, OUT_UNDER) as usize] == port(d, IN_UNDER);
            let anti = self.link[port(d, OUT_UNDER) as usize] == port(c, IN_UNDER);
            if parallel && self.bounds_bigon(oo, next, port(c, OUT_UNDER), port(d, IN_UNDER)) {
                return Some((c, d));
            }
            if anti && self.bounds_bigon(oo, next, port(c, IN_UNDER), port(d, OUT_UNDER)) {
                return Some((c, d));
            }
        }
        None
    }

    /// Removes first-Reidemeister kinks and second-Reidemeister clasps until
    /// none remain. The link type is unchanged.
    pub fn simplify(&self) -> LinkDiagram {
        let mut d = self.clone();
        loop {
            let kinks: Vec<usize> = (0..d.signs.len()).filter(|&c| d.is_kink(c)).collect();
            if !kinks.is_empty() {
                let mut routes = vec![Route::Keep; d.signs.len()];
                for &c in &kinks {
                    routes[c] = Route::Smooth;
                }
                d = d.contract(&routes, kinks.len());
                continue;
            }
            match d.find_clasp() {
                Some((a, b)) => {
                    let mut routes = vec![Route::Keep; d.signs.len()];
                    routes[a] = Route::PassThrough;
                    routes[b] = Route::PassThrough;
                    d = d.contract(&routes, 0);
                }
                None => return d,
            }
        }
    }

    /// Number of faces of the planar map (0 for a crossing-free diagram).
    /// A connected diagram with `v` crossings has `v + 2` faces.
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.link.len()];
        let mut faces = 0;
        for start in 0..self.link.len() as Port {
            if seen[start as usize] {
                continue;
            }
            faces += 1;
            let mut p = start;
            while !seen[p as usize] {
                seen[p as usize] = true;
                p = self.cw_next(self.link[p as usize]);
            }
        }
        faces
    }

    /// Connected pieces of the underlying 4-valent graph, free loops
    /// excluded.
    pub fn connected_pieces(&self) -> usize {
        let nc = self.signs.len();
        let mut parent: Vec<usize> = (0..nc).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut pieces = nc;
        for (p, &q) in self.link.iter().enumerate() {
            let (a, b) = (
                find(&mut parent, crossing_of(p as Port)),
                find(&mut parent, crossing_of(q)),
            );
            if a != b {
                parent[a] = b;
                pieces -= 1;
            }
        }
        pieces
    }

    /// Euler check: every connected piece of a planar diagram satisfies
    /// `V - E + F = 2`.
    pub fn is_planar(&self) -> bool {
        let v = self.signs.len() as i64;
        let e = 2 * v;
        let f = self.face_count() as i64;
        v - e + f == 2 * self.connected_pieces() as i64
    }

    /// A serialization that does not depend on crossing numbering, given the
    /// component starts: crossings are renumbered in order of first
    /// appearance along the traversal.
    pub fn canonical_key(&self, labels: &ComponentLabeling) -> Vec<u32> {
        let nc = self.signs.len();
        let mut order = vec![u32::MAX; nc];
        let mut next = 0u32;
        for (c, _) in self.traversal(labels) {
            if order[c] == u32::MAX {
                order[c] = next;
                next += 1;
            }
        }
        let mut key = vec![0u32; 1 + 5 * nc];
        key[0] = self.free_loops as u32;
        for c in 0..nc {
            let slot = 1 + 5 * order[c] as usize;
            key[slot] = (self.signs[c] == Sign::Pos) as u32;
            for r in 0..4 {
                let q = self.link[port(c, r) as usize];
                key[slot + 1 + r as usize] = order[crossing_of(q)] << 2 | role_of(q);
            }
        }
        key
    }

    pub fn to_pd(&self) -> PlanarDiagramCode {
        // Arc k is the arc leaving the k-th out-port.
        let nc = self.signs.len();
        let arc_of_out = |p: Port| -> usize { 2 * crossing_of(p) + (role_of(p) >> 1) as usize };
        let crossings = (0..nc)
            .map(|c| PdCrossing {
                sign: self.signs[c].value() as i8,
                ports: [
                    arc_of_out(self.link[port(c, IN_OVER) as usize]),
                    arc_of_out(port(c, OUT_OVER)),
                    arc_of_out(self.link[port(c, IN_UNDER) as usize]),
                    arc_of_out(port(c, OUT_UNDER)),
                ],
            })
            .collect();
        PlanarDiagramCode {
            schema: PD_SCHEMA.to_string(),
            free_loops: self.free_loops,
            crossings,
            seeds: self
                .seeds
                .iter()
                .map(|&s| arc_of_out(self.link[s as usize]))
                .collect(),
        }
    }

    pub fn from_pd(pd: &PlanarDiagramCode) -> Result<LinkDiagram, DiagramError> {
        if pd.schema != PD_SCHEMA {
            return Err(DiagramError::Inconsistent(format!("unknown schema {}", pd.schema)));
        }
        let nc = pd.crossings.len();
        let arcs = 2 * nc;
        let mut tail = vec![u32::MAX; arcs];
        let mut head = vec![u32::MAX; arcs];
        let mut signs = Vec::with_capacity(nc);
        for (c, x) in pd.crossings.iter().enumerate() {
            let sign = Sign::from_value(x.sign as i64)
                .ok_or_else(|| DiagramError::Inconsistent(format!("crossing {c} sign {}", x.sign)))?;
            signs.push(sign);
            for (r, &a) in x.ports.iter().enumerate() {
                if a >= arcs {
                    return Err(DiagramError::Inconsistent(format!("arc {a} out of range")));
                }
                let slot = if r % 2 == 0 { &mut head[a] } else { &mut tail[a] };
                if *slot != u32::MAX {
                    return Err(DiagramError::Inconsistent(format!("arc {a} used twice")));
                }
                *slot = port(c, r as u32);
            }
        }
        let mut link = vec![u32::MAX; 4 * nc];
        for a in 0..arcs {
            if tail[a] == u32::MAX || head[a] == u32::MAX {
                return Err(DiagramError::Inconsistent(format!("arc {a} is open")));
            }
            link[tail[a] as usize] = head[a];
            link[head[a] as usize] = tail[a];
        }
        let seeds = pd
            .seeds
            .iter()
            .map(|&a| {
                head.get(a)
                    .copied()
                    .ok_or_else(|| DiagramError::Inconsistent(format!("seed arc {a} out of range")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let d = LinkDiagram {
            signs,
            link,
            free_loops: pd.free_loops,
            seeds,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_pd()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<LinkDiagram, DiagramError> {
        let pd: PlanarDiagramCode = serde_json::from_str(text)
            .map_err(|e| DiagramError::Inconsistent(format!("json: {e}")))?;
        LinkDiagram::from_pd(&pd)
    }
}

pub const PD_SCHEMA: &str = "braidex.pd/1";

/// JSON form of a diagram.
///
/// ```json
/// { "schema": "braidex.pd/1",
///   "free_loops": 0,
///   "crossings": [ { "sign": 1, "ports": [in_over, out_over, in_under, out_under] } ],
///   "seeds": [arc, ...] }
/// ```
///
/// Ports hold arc ids in `0..2 * crossings`; every arc appears once as an
/// outgoing port and once as an incoming port. `seeds` lists arcs whose
/// components are labeled first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagramCode {
    pub schema: String,
    pub free_loops: usize,
    pub crossings: Vec<PdCrossing>,
    #[serde(default)]
    pub seeds: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCrossing {
    pub sign: i8,
    pub ports: [usize; 4],
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn closures() {
        let d = LinkDiagram::closure(&BraidWord::identity(3));
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 3);

        let hopf = LinkDiagram::closure(&w(2, &[1, 1]));
        hopf.validate().unwrap();
        assert_eq!(hopf.crossing_count(), 2);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.linking_matrix().get(0, 1), 1);
        assert!(hopf.is_planar());
    }

    #[test]
    fn axis_links() {
        let d = LinkDiagram::axis_link(&BraidWord::identity(1));
        d.validate().unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.linking_matrix().get(0, 1), 1);

        let d = LinkDiagram::axis_link(&BraidWord::identity(2));
        let m = d.linking_matrix();
        assert_eq!(m.size(), 3);
        assert_eq!((m.get(0, 2), m.get(1, 2), m.get(0, 1)), (1, 1, 0));

        let d = LinkDiagram::axis_link(&w(2, &[1]));
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(d.linking_matrix().get(0, 1), 2);
        assert!(d.is_planar());
    }

    #[test]
    fn labels_follow_top_positions() {
        // π = (1 3)(2): component of strand 1 first, axis last.
        let d = LinkDiagram::axis_link(&w(3, &[1, 2, -1]));
        let labels = d.components();
        assert_eq!(labels.count(), 3);
        let m = d.linking_matrix();
        assert_eq!(m.get(0, 2), 2);
        assert_eq!(m.get(1, 2), 1);
    }

    #[test]
    fn surgery() {
        let d = LinkDiagram::closure(&w(2, &[1]));
        let s = d.smooth_crossing(0).unwrap();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.component_count(), 2);

        let hopf = LinkDiagram::closure(&w(2, &[1, 1]));
        let s = hopf.smooth_crossing(0).unwrap();
        assert_eq!(s.component_count(), 1);
        let neg = hopf.switch_crossing(0).unwrap().switch_crossing(1).unwrap();
        assert_eq!(neg.linking_matrix().get(0, 1), -1);
        assert_eq!(neg.signs(), &[Sign::Neg, Sign::Neg]);

        let del = hopf.delete_component(0).unwrap();
        assert_eq!(del.crossing_count(), 0);
        assert_eq!(del.component_count(), 1);

        assert!(matches!(hopf.switch_crossing(7), Err(DiagramError::NoSuchCrossing(7))));
        assert!(matches!(hopf.delete_component(2), Err(DiagramError::NoSuchComponent(2))));
    }

    #[test]
    fn mirror_is_involution() {
        let d = LinkDiagram::axis_link(&w(3, &[1, -2, 1, 2]));
        let m = d.mirror();
        assert_eq!(m.mirror(), d);
        let (a, b) = (d.linking_matrix(), m.linking_matrix());
        for i in 0..a.size() {
            for j in 0..a.size() {
                assert_eq!(a.get(i, j), -b.get(i, j));
            }
        }
        assert!(m.is_planar());
    }

    #[test]
    fn simplification() {
        let d = LinkDiagram::closure(&w(2, &[1])).simplify();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);

        let d = LinkDiagram::closure(&w(2, &[1, -1]));
        assert!(!d.is_split_with(&d.components()));
        assert!(d.is_split());
        let s = d.simplify();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.component_count(), 2);
        assert!(s.is_split());

        // The trefoil is already reduced.
        let t = LinkDiagram::closure(&w(2, &[1, 1, 1])).simplify();
        assert_eq!(t.crossing_count(), 3);

        // σ1 σ2 σ1^{-1}: clasp across a third strand does not cancel, but the
        // kinks from the closure do.
        let d = LinkDiagram::closure(&w(3, &[1, 2, -1])).simplify();
        assert!(d.crossing_count() <= 1);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn json_round_trip() {
        let d = LinkDiagram::axis_link(&w(3, &[1, -2, 1]));
        let text = d.to_json();
        let back = LinkDiagram::from_json(&text).unwrap();
        assert_eq!(back.signs(), d.signs());
        assert_eq!(back.linking_matrix(), d.linking_matrix());
        assert_eq!(back.to_json(), text);
        assert!(LinkDiagram::from_json("{\"schema\":\"x\",\"free_loops\":0,\"crossings\":[]}").is_err());
    }
}
