//! Ground truth by face tracing: every T-rotation system of a cubic ladder
//! is enumerated, its faces are traced and the surface is classified by
//! Euler characteristic. Nothing here uses overlap-matrix theory except the
//! checks that compare against it.
//!
//! A cubic vertex has two rotations. A vertex is *black* when it carries the
//! clockwise order of the reference drawing stored in [`LadderGraph`] and
//! *white* otherwise. Twists live on cotree edges only.
//!
//! Systems are packed into one integer: bit `v` (for `v < |V|`) is the color
//! of vertex `v` (1 = white), and bit `|V| + i` is the twist of cotree edge
//! `i`.

use std::fmt;

use crate::error::OracleError;
use crate::family::Family;
use crate::gf2::{rank_in_place, Gf2SymMatrix, MAX_DIM};
use crate::graph::{Dart, LadderGraph, LadderKind};
use crate::overlap::{build_ringel_matrix, fill_rows, RingelAssignment};
use crate::parallel;
use crate::poly::TotalPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    colors: u64,
    twists: u64,
}

impl RotationSystem {
    /// `colors` bit `v` set means vertex `v` is white; `twists` bit `i`
    /// set means cotree edge `i` is twisted.
    pub fn new(colors: u64, twists: u64) -> Self {
        RotationSystem { colors, twists }
    }

    pub fn from_code(g: &LadderGraph, code: u64) -> Self {
        let nv = g.vertex_count();
        RotationSystem {
            colors: code & ((1u64 << nv) - 1),
            twists: code >> nv,
        }
    }

    pub fn code(&self, g: &LadderGraph) -> u64 {
        self.colors | (self.twists << g.vertex_count())
    }

    pub fn is_white(&self, v: usize) -> bool {
        (self.colors >> v) & 1 == 1
    }

    pub fn colors(&self) -> u64 {
        self.colors
    }

    pub fn twists(&self) -> u64 {
        self.twists
    }

    /// Twist bit of cotree edge `i`.
    pub fn cotree_twist(&self, i: usize) -> bool {
        (self.twists >> i) & 1 == 1
    }

    /// Twist of an arbitrary edge; tree edges are never twisted.
    pub fn edge_twist(&self, g: &LadderGraph, e: usize) -> bool {
        g.cotree_edges()
            .iter()
            .position(|&c| c == e)
            .is_some_and(|i| self.cotree_twist(i))
    }

    pub fn untwisted(&self) -> bool {
        self.twists == 0
    }
}

/// A closed surface: orientable with `genus` handles, or nonorientable with
/// `crosscaps >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceClass {
    pub orientable: bool,
    pub genus_or_crosscap: u32,
}

impl SurfaceClass {
    pub fn euler_characteristic(&self) -> i64 {
        let k = i64::from(self.genus_or_crosscap);
        if self.orientable {
            2 - 2 * k
        } else {
            2 - k
        }
    }

    /// The GF(2) overlap-matrix rank predicted for an embedding on this
    /// surface: twice the genus, or the crosscap number.
    pub fn expected_rank(&self) -> usize {
        let k = self.genus_or_crosscap as usize;
        if self.orientable {
            2 * k
        } else {
            k
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.orientable { 'S' } else { 'N' };
        write!(f, "{tag}{}", self.genus_or_crosscap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: usize,
    pub euler: i64,
    pub surface: SurfaceClass,
}

/// Precomputed dart tables for repeated tracing on one graph.
#[derive(Clone, Debug)]
pub struct FaceTracer<'g> {
    graph: &'g LadderGraph,
    /// Clockwise successor and predecessor of each dart at its vertex.
    succ: Vec<Dart>,
    pred: Vec<Dart>,
    vertex: Vec<usize>,
    /// Cotree index of each edge, if any.
    cotree_slot: Vec<Option<u32>>,
}

impl<'g> FaceTracer<'g> {
    pub fn new(graph: &'g LadderGraph) -> Result<Self, OracleError> {
        if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) != 3) {
            return Err(OracleError::NotCubic(
                graph.vertex_label(v).to_string(),
                graph.degree(v),
            ));
        }
        let darts = 2 * graph.edge_count();
        let mut succ = vec![0; darts];
        let mut pred = vec![0; darts];
        for v in 0..graph.vertex_count() {
            let rot = graph.rotation_at(v);
            for (i, &d) in rot.iter().enumerate() {
                succ[d] = rot[(i + 1) % rot.len()];
                pred[d] = rot[(i + rot.len() - 1) % rot.len()];
            }
        }
        let vertex = (0..darts).map(|d| graph.dart_vertex(d)).collect();
        let mut cotree_slot = vec![None; graph.edge_count()];
        for (i, &e) in graph.cotree_edges().iter().enumerate() {
            cotree_slot[e] = Some(i as u32);
        }
        Ok(FaceTracer {
            graph,
            succ,
            pred,
            vertex,
            cotree_slot,
        })
    }

    pub fn graph(&self) -> &LadderGraph {
        self.graph
    }

    /// Number of `(dart, orientation)` states.
    fn states(&self) -> usize {
        2 * self.succ.len()
    }

    /// Counts faces by following the signed face-tracing walk over
    /// `(dart, orientation)` states. Leaving along dart `d` with sign `s`,
    /// the walk reaches the mate `d ^ 1`, flips `s` on a twisted edge, and
    /// departs along the rotation successor (sign 0) or predecessor (sign 1)
    /// of the mate, reversed at white vertices. Every face is met once in
    /// each direction, so faces are half the orbits.
    pub fn count_faces(&self, rho: &RotationSystem, seen: &mut Vec<bool>) -> Result<usize, OracleError> {
        seen.clear();
        seen.resize(self.states(), false);
        let mut orbits = 0;
        for start in 0..self.states() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut state = start;
            while !seen[state] {
                seen[state] = true;
                let (d, mut s) = (state >> 1, state & 1);
                let mate = d ^ 1;
                if let Some(i) = self.cotree_slot[d >> 1] {
                    s ^= rho.cotree_twist(i as usize) as usize;
                }
                let white = rho.is_white(self.vertex[mate]) as usize;
                let next = if s ^ white == 0 {
                    self.succ[mate]
                } else {
                    self.pred[mate]
                };
                state = (next << 1) | s;
            }
            if state != start {
                // the map is a permutation, so orbits always close at start
                unreachable!("face walk re-entered an orbit away from its start");
            }
        }
        if orbits % 2 == 1 {
            return Err(OracleError::OddOrbits(orbits));
        }
        Ok(orbits / 2)
    }

    pub fn trace(&self, rho: &RotationSystem, seen: &mut Vec<bool>) -> Result<FaceTrace, OracleError> {
        let faces = self.count_faces(rho, seen)?;
        let euler =
            self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + faces as i64;
        let surface = if rho.untwisted() {
            if euler % 2 != 0 || euler > 2 {
                return Err(OracleError::OddOrientable { chi: euler });
            }
            SurfaceClass {
                orientable: true,
                genus_or_crosscap: ((2 - euler) / 2) as u32,
            }
        } else {
            if euler >= 2 {
                return Err(OracleError::BadNonorientable { chi: euler });
            }
            SurfaceClass {
                orientable: false,
                genus_or_crosscap: (2 - euler) as u32,
            }
        };
        Ok(FaceTrace {
            faces,
            euler,
            surface,
        })
    }
}

/// Faces and surface of one T-rotation system.
pub fn trace_faces(g: &LadderGraph, rho: &RotationSystem) -> Result<FaceTrace, OracleError> {
    FaceTracer::new(g)?.trace(rho, &mut Vec::new())
}

/// `log2` of the number of T-rotation systems: one color bit per vertex and
/// one twist bit per cotree edge.
pub fn system_bits(g: &LadderGraph) -> u32 {
    (g.vertex_count() + g.betti()) as u32
}

/// Every T-rotation system of a cubic graph, in code order.
pub fn enumerate_systems(
    g: &LadderGraph,
) -> Result<impl Iterator<Item = RotationSystem> + '_, OracleError> {
    FaceTracer::new(g)?;
    let bits = system_bits(g);
    Ok((0..1u64 << bits).map(move |code| RotationSystem::from_code(g, code)))
}

/// The matrix variables a system determines: `x` from twists, `y_j` from
/// whether `b_j` joins different colors, `z_k` likewise for `c_k`.
pub fn ringel_assignment_of(
    g: &LadderGraph,
    rho: &RotationSystem,
) -> Result<RingelAssignment, OracleError> {
    let r = g.ringel_edges().ok_or(OracleError::NotRingel)?;
    let unmatched = |e: usize| {
        let [a, b] = g.edges()[e].ends;
        rho.is_white(a) != rho.is_white(b)
    };
    let x = (0..g.cotree_edges().len()).map(|i| rho.cotree_twist(i)).collect();
    let y = r.b.iter().map(|&e| unmatched(e)).collect();
    let z = r.c.iter().map(|&e| unmatched(e)).collect();
    Ok(RingelAssignment::new(x, y, z).expect("lengths follow from the graph"))
}

/// Overlap matrix of a T-rotation system on a Ringel ladder, rows in
/// cotree order `e, a_1, ..., a_n`.
pub fn overlap_matrix_of(
    g: &LadderGraph,
    rho: &RotationSystem,
) -> Result<Gf2SymMatrix, OracleError> {
    let a = ringel_assignment_of(g, rho)?;
    build_ringel_matrix(&a).map_err(|e| match e {
        crate::error::EnumError::Gf2(g) => OracleError::Gf2(g),
        other => unreachable!("valid assignment rejected: {other}"),
    })
}

#[derive(Clone, Copy, Debug)]
pub struct TraceConfig {
    pub workers: usize,
    /// Largest ladder parameter accepted by the tracing entry points.
    pub max_n: usize,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            workers: parallel::default_workers(),
            max_n: 8,
        }
    }
}

impl TraceConfig {
    pub fn with_workers(workers: usize) -> Self {
        TraceConfig {
            workers,
            ..Self::default()
        }
    }
}

fn ringel_for(n: usize, cfg: &TraceConfig) -> Result<LadderGraph, OracleError> {
    let g = LadderGraph::ringel(n)?;
    if n > cfg.max_n {
        return Err(OracleError::OverBudget {
            n,
            bits: system_bits(&g),
            cap: cfg.max_n,
        });
    }
    Ok(g)
}

/// Genus counts and crosscap counts, indexed by genus or crosscap number.
type Histogram = (Vec<u64>, Vec<u64>);

fn histogram_to_total(genus: &[u64], crosscap: &[u64]) -> Result<TotalPoly, OracleError> {
    Ok(TotalPoly::from_counts(genus, crosscap)?)
}

/// Surface histogram over systems `code` in `codes`, as
/// `(genus counts, crosscap counts)`.
fn histogram(
    tracer: &FaceTracer<'_>,
    codes: impl Iterator<Item = u64>,
) -> Result<Histogram, OracleError> {
    let g = tracer.graph();
    let width = g.betti() + 2;
    let mut genus = vec![0u64; width];
    let mut crosscap = vec![0u64; width];
    let mut seen = Vec::new();
    for code in codes {
        let t = tracer.trace(&RotationSystem::from_code(g, code), &mut seen)?;
        let k = t.surface.genus_or_crosscap as usize;
        if t.surface.orientable {
            genus[k] += 1;
        } else {
            crosscap[k] += 1;
        }
    }
    Ok((genus, crosscap))
}

fn merge_histograms(
    parts: Vec<Result<Histogram, OracleError>>,
) -> Result<Histogram, OracleError> {
    let mut acc: Option<Histogram> = None;
    for part in parts {
        let (g, c) = part?;
        match &mut acc {
            None => acc = Some((g, c)),
            Some((ag, ac)) => {
                ag.iter_mut().zip(g).for_each(|(a, b)| *a += b);
                ac.iter_mut().zip(c).for_each(|(a, b)| *a += b);
            }
        }
    }
    Ok(acc.unwrap_or_default())
}

/// `I(x, y)` of `R_{n-1}` as the surface histogram of all `2^(3n+1)`
/// T-rotation systems.
pub fn total_poly_by_tracing(n: usize, cfg: &TraceConfig) -> Result<TotalPoly, OracleError> {
    let g = ringel_for(n, cfg)?;
    let tracer = FaceTracer::new(&g)?;
    let parts = parallel::partitioned(1u64 << system_bits(&g), cfg.workers, |r| {
        histogram(&tracer, r)
    });
    let (genus, crosscap) = merge_histograms(parts)?;
    histogram_to_total(&genus, &crosscap)
}

/// Genus polynomial of `R_{n-1}` from the untwisted systems only.
pub fn genus_poly_by_tracing(n: usize, cfg: &TraceConfig) -> Result<TotalPoly, OracleError> {
    let g = ringel_for(n, cfg)?;
    let tracer = FaceTracer::new(&g)?;
    // untwisted systems are exactly the codes below 2^|V|
    let parts = parallel::partitioned(1u64 << g.vertex_count(), cfg.workers, |r| {
        histogram(&tracer, r)
    });
    let (genus, crosscap) = merge_histograms(parts)?;
    histogram_to_total(&genus, &crosscap)
}

/// Total embedding polynomial of the closed-end ladder `L_k` by tracing.
pub fn closed_end_total_by_tracing(k: usize, cfg: &TraceConfig) -> Result<TotalPoly, OracleError> {
    let g = LadderGraph::closed_end(k)?;
    if k > cfg.max_n {
        return Err(OracleError::OverBudget {
            n: k,
            bits: system_bits(&g),
            cap: cfg.max_n,
        });
    }
    let tracer = FaceTracer::new(&g)?;
    let parts = parallel::partitioned(1u64 << system_bits(&g), cfg.workers, |r| {
        histogram(&tracer, r)
    });
    let (genus, crosscap) = merge_histograms(parts)?;
    histogram_to_total(&genus, &crosscap)
}

/// A system whose overlap-matrix rank disagrees with its traced surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoharException {
    pub code: u64,
    pub rank: usize,
    pub surface: SurfaceClass,
}

/// Everything one pass over all T-rotation systems of `R_{n-1}` can check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survey {
    pub n: usize,
    pub systems: u64,
    pub total: TotalPoly,
    /// First few rank/surface disagreements, in code order.
    pub mohar_exceptions: Vec<MoharException>,
    pub mohar_exception_count: u64,
    /// Number of assignments hit by `k` systems, indexed by `k`.
    pub preimage_histogram: Vec<u64>,
    /// Systems whose face count or Euler characteristic is out of bounds.
    pub sanity_violations: u64,
}

impl Survey {
    /// Every assignment has exactly two preimages.
    pub fn two_to_one(&self) -> bool {
        let assignments = 1u64 << (3 * self.n);
        self.preimage_histogram.get(2).copied() == Some(assignments)
            && self
                .preimage_histogram
                .iter()
                .enumerate()
                .all(|(k, &c)| k == 2 || c == 0)
    }
}

const EXCEPTION_LIMIT: usize = 16;

struct SurveyPart {
    genus: Vec<u64>,
    crosscap: Vec<u64>,
    exceptions: Vec<MoharException>,
    exception_count: u64,
    preimages: Vec<u8>,
    sanity: u64,
}

/// Traces every T-rotation system of `R_{n-1}` and checks, per system, that
/// the rank of its overlap matrix is twice the genus or the crosscap
/// number, and counts how many systems map to each matrix assignment.
pub fn survey(n: usize, cfg: &TraceConfig) -> Result<Survey, OracleError> {
    let g = ringel_for(n, cfg)?;
    let tracer = FaceTracer::new(&g)?;
    let bits = system_bits(&g);
    let dim = n + 1;
    let edges = g.edge_count();
    let parts = parallel::partitioned(1u64 << bits, cfg.workers, |range| {
        let width = g.betti() + 2;
        let mut part = SurveyPart {
            genus: vec![0; width],
            crosscap: vec![0; width],
            exceptions: Vec::new(),
            exception_count: 0,
            preimages: vec![0; 1 << (3 * n)],
            sanity: 0,
        };
        let mut seen = Vec::new();
        let mut rows = [0u64; MAX_DIM];
        for code in range {
            let rho = RotationSystem::from_code(&g, code);
            let t = tracer.trace(&rho, &mut seen)?;
            let k = t.surface.genus_or_crosscap as usize;
            if t.surface.orientable {
                part.genus[k] += 1;
            } else {
                part.crosscap[k] += 1;
            }
            if t.faces < 1 || t.faces > 2 * edges || t.euler > 2 {
                part.sanity += 1;
            }
            let assignment = ringel_assignment_of(&g, &rho)?.encode();
            part.preimages[assignment as usize] += 1;
            fill_rows(Family::R, n, assignment, &mut rows[..dim]);
            let rank = rank_in_place(&mut rows[..dim]);
            if rank != t.surface.expected_rank() {
                part.exception_count += 1;
                if part.exceptions.len() < EXCEPTION_LIMIT {
                    part.exceptions.push(MoharException {
                        code,
                        rank,
                        surface: t.surface,
                    });
                }
            }
        }
        Ok::<_, OracleError>(part)
    });

    let width = g.betti() + 2;
    let mut genus = vec![0u64; width];
    let mut crosscap = vec![0u64; width];
    let mut exceptions = Vec::new();
    let mut exception_count = 0;
    let mut preimages = vec![0u8; 1 << (3 * n)];
    let mut sanity = 0;
    for part in parts {
        let part = part?;
        genus.iter_mut().zip(part.genus).for_each(|(a, b)| *a += b);
        crosscap.iter_mut().zip(part.crosscap).for_each(|(a, b)| *a += b);
        exceptions.extend(part.exceptions);
        exception_count += part.exception_count;
        preimages
            .iter_mut()
            .zip(part.preimages)
            .for_each(|(a, b)| *a += b);
        sanity += part.sanity;
    }
    exceptions.truncate(EXCEPTION_LIMIT);
    let max_pre = preimages.iter().copied().max().unwrap_or(0) as usize;
    let mut preimage_histogram = vec![0u64; max_pre.max(2) + 1];
    for &p in &preimages {
        preimage_histogram[p as usize] += 1;
    }
    Ok(Survey {
        n,
        systems: 1u64 << bits,
        total: histogram_to_total(&genus, &crosscap)?,
        mohar_exceptions: exceptions,
        mohar_exception_count: exception_count,
        preimage_histogram,
        sanity_violations: sanity,
    })
}

/// Whether a graph is a Ringel ladder (and thus has color-derived overlap
/// matrices).
pub fn supports_overlap(g: &LadderGraph) -> bool {
    g.kind() == LadderKind::Ringel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::total_embedding_poly;

    fn one_worker() -> TraceConfig {
        TraceConfig::with_workers(1)
    }

    #[test]
    fn system_counts() {
        for (n, want) in [(2usize, 128u64), (3, 1024), (5, 65536)] {
            let g = LadderGraph::ringel(n).unwrap();
            assert_eq!(enumerate_systems(&g).unwrap().count() as u64, want);
        }
        let g = LadderGraph::ringel(3).unwrap();
        let mut codes: Vec<u64> = enumerate_systems(&g).unwrap().map(|r| r.code(&g)).collect();
        codes.dedup();
        assert_eq!(codes.len(), 1024);
    }

    #[test]
    fn reference_drawing_is_planar() {
        for n in 2..=12 {
            let g = LadderGraph::ringel(n).unwrap();
            let t = trace_faces(&g, &RotationSystem::new(0, 0)).unwrap();
            assert_eq!(t.euler, 2, "n={n}");
            assert_eq!(t.surface, SurfaceClass { orientable: true, genus_or_crosscap: 0 });
            // mirror image
            let all_white = (1u64 << g.vertex_count()) - 1;
            let t = trace_faces(&g, &RotationSystem::new(all_white, 0)).unwrap();
            assert_eq!(t.euler, 2);
        }
        for k in 1..=8 {
            let g = LadderGraph::closed_end(k).unwrap();
            let t = trace_faces(&g, &RotationSystem::new(0, 0)).unwrap();
            assert_eq!(t.euler, 2, "k={k}");
        }
    }

    #[test]
    fn sphere_systems_of_k4() {
        let g = LadderGraph::ringel(2).unwrap();
        let spheres: Vec<RotationSystem> = enumerate_systems(&g)
            .unwrap()
            .filter(|rho| {
                let t = trace_faces(&g, rho).unwrap();
                t.surface == SurfaceClass { orientable: true, genus_or_crosscap: 0 }
            })
            .collect();
        assert_eq!(spheres.len(), 2);
        for rho in &spheres {
            assert_eq!(overlap_matrix_of(&g, rho).unwrap().rank(), 0);
        }
    }

    #[test]
    fn untwisted_systems_are_orientable_with_integer_genus() {
        let g = LadderGraph::ringel(4).unwrap();
        let tracer = FaceTracer::new(&g).unwrap();
        let mut seen = Vec::new();
        for colors in 0..(1u64 << g.vertex_count()) {
            let t = tracer.trace(&RotationSystem::new(colors, 0), &mut seen).unwrap();
            assert!(t.surface.orientable);
            assert_eq!(t.euler % 2, 0);
        }
    }

    #[test]
    fn single_twist_rank_one_is_projective_plane() {
        let g = LadderGraph::ringel(2).unwrap();
        let mut hits = 0;
        for rho in enumerate_systems(&g).unwrap() {
            let m = overlap_matrix_of(&g, &rho).unwrap();
            if rho.twists().count_ones() == 1 && m.rank() == 1 {
                let t = trace_faces(&g, &rho).unwrap();
                assert_eq!(t.surface, SurfaceClass { orientable: false, genus_or_crosscap: 1 });
            }
            if trace_faces(&g, &rho).unwrap().surface
                == (SurfaceClass { orientable: false, genus_or_crosscap: 1 })
            {
                hits += 1;
            }
        }
        assert_eq!(hits, 14);
    }

    #[test]
    fn overlap_matrix_from_colors() {
        let g = LadderGraph::ringel(2).unwrap();
        let m = overlap_matrix_of(&g, &RotationSystem::new(0, 0)).unwrap();
        assert_eq!(m, Gf2SymMatrix::zero(3).unwrap());

        let u2 = g.vertex_by_label("u2").unwrap();
        let a = ringel_assignment_of(&g, &RotationSystem::new(1 << u2, 0)).unwrap();
        assert_eq!(a.y(), &[true]);
        assert_eq!(a.z(), &[false, false]);
        let m = overlap_matrix_of(&g, &RotationSystem::new(1 << u2, 0)).unwrap();
        assert_eq!(m.render(), "0 0 0\n0 0 1\n0 1 0\n");

        // twist on e sets x_0 only
        let m = overlap_matrix_of(&g, &RotationSystem::new(0, 1)).unwrap();
        assert_eq!(m.render(), "1 0 0\n0 0 0\n0 0 0\n");
    }

    #[test]
    fn edge_twists_stay_on_the_cotree() {
        let g = LadderGraph::ringel(3).unwrap();
        let rho = RotationSystem::new(0, 0b1111);
        for e in 0..g.edge_count() {
            assert_eq!(rho.edge_twist(&g, e), !g.is_tree_edge(e));
        }
    }

    #[test]
    fn overlap_needs_ringel() {
        let g = LadderGraph::closed_end(3).unwrap();
        assert_eq!(
            overlap_matrix_of(&g, &RotationSystem::new(0, 0)),
            Err(OracleError::NotRingel)
        );
        assert!(!supports_overlap(&g));
    }

    #[test]
    fn tracing_small_totals() {
        let t = total_poly_by_tracing(2, &one_worker()).unwrap();
        assert_eq!(t.render(), "2+14x+14y+42y^2+56y^3");
        let t = total_poly_by_tracing(4, &TraceConfig::with_workers(4)).unwrap();
        assert_eq!(
            t.render(),
            "2+70x+184x^2+30y+242y^2+1448y^3+3272y^4+2944y^5"
        );
        let g = genus_poly_by_tracing(3, &one_worker()).unwrap();
        assert_eq!(g.render(), "2+38x+24x^2");
    }

    #[test]
    fn tracing_matches_recurrence() {
        for n in 2..=5 {
            assert_eq!(
                total_poly_by_tracing(n, &TraceConfig::with_workers(3)).unwrap(),
                total_embedding_poly(n).unwrap()
            );
        }
    }

    #[test]
    fn survey_small() {
        for n in 2..=4 {
            let s = survey(n, &TraceConfig::with_workers(2)).unwrap();
            assert_eq!(s.mohar_exception_count, 0);
            assert!(s.two_to_one(), "{:?}", s.preimage_histogram);
            assert_eq!(s.sanity_violations, 0);
            assert_eq!(s.total, total_embedding_poly(n).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = TraceConfig { workers: 1, max_n: 3 };
        assert!(matches!(
            total_poly_by_tracing(4, &cfg),
            Err(OracleError::OverBudget { n: 4, bits: 13, cap: 3 })
        ));
    }

    #[test]
    fn closed_end_ladder_embeddings() {
        // L_1 is the theta graph: 4 orientable embeddings (2 spheres, 2 tori)
        // and 12 nonorientable ones.
        let t = closed_end_total_by_tracing(1, &one_worker()).unwrap();
        assert_eq!(t.genus_sum(), 4u32.into());
        assert_eq!(t.crosscap_sum(), 12u32.into());
        for k in 1..=4 {
            let t = closed_end_total_by_tracing(k, &one_worker()).unwrap();
            let pure = 1u64 << (2 * k);
            assert_eq!(t.genus_sum(), pure.into());
            assert_eq!(t.crosscap_sum(), (((1u64 << (k + 1)) - 1) * pure).into());
        }
    }
}
