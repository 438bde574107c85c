//! Finite abstract simplicial complexes on labelled vertex sets.
//!
//! Faces are vertex masks grouped by cardinality, each layer sorted. A complex
//! with no faces at all is *void*; the complex `{∅}` is the empty space. The
//! two are distinct: the empty space is the unit for joins, the void complex
//! has no realization and is rejected by homology and Euler computations.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{full_set, vertices_of, DegreeBound, Graph, VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `layers[c]` holds the faces with `c` vertices, sorted by mask.
    layers: Vec<Vec<VertexSet>>,
    maximal: OnceLock<Vec<VertexSet>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.layers == other.layers
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity { requested: n, limit: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Sorted vertex indices of a face.
pub fn face_vertices(face: VertexSet) -> Vec<usize> {
    vertices_of(face).collect()
}

impl SimplicialComplex {
    /// Build from a face family that is already closed under subsets.
    fn from_closed_faces(vertex_count: usize, faces: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut layers: Vec<Vec<VertexSet>> = Vec::new();
        for f in faces {
            let c = f.count_ones() as usize;
            if layers.len() <= c {
                layers.resize(c + 1, Vec::new());
            }
            layers[c].push(f);
        }
        for layer in &mut layers {
            layer.sort_unstable();
            layer.dedup();
        }
        let k = SimplicialComplex { vertex_count, layers, maximal: OnceLock::new() };
        debug_assert!(k.is_closed());
        k
    }

    pub fn void(vertex_count: usize) -> Result<Self> {
        check_capacity(vertex_count)?;
        Ok(SimplicialComplex { vertex_count, layers: Vec::new(), maximal: OnceLock::new() })
    }

    /// The complex `{∅}`.
    pub fn empty_space(vertex_count: usize) -> Result<Self> {
        check_capacity(vertex_count)?;
        Ok(SimplicialComplex::from_closed_faces(vertex_count, [0]))
    }

    /// Full simplex on the vertices `0..n`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_capacity(n)?;
        if n > 30 {
            return Err(Error::InvalidArgument(format!("full simplex on {n} vertices is too large to list")));
        }
        let full = full_set(n);
        Ok(SimplicialComplex::from_closed_faces(n, 0..=full))
    }

    /// `n` isolated points.
    pub fn discrete(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(SimplicialComplex::from_closed_faces(n, std::iter::once(0).chain((0..n).map(|v| 1 << v))))
    }

    /// Downward closure of the given generating faces.
    pub fn from_generators(vertex_count: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_capacity(vertex_count)?;
        let allowed = full_set(vertex_count);
        let mut by_card: Vec<HashSet<VertexSet>> = Vec::new();
        for g in generators {
            if g & !allowed != 0 {
                return Err(Error::InvalidArgument(format!(
                    "face {:?} uses a vertex outside 0..{vertex_count}",
                    face_vertices(g)
                )));
            }
            let c = g.count_ones() as usize;
            if by_card.len() <= c {
                by_card.resize_with(c + 1, HashSet::new);
            }
            by_card[c].insert(g);
        }
        for c in (1..by_card.len()).rev() {
            let facets: Vec<VertexSet> = by_card[c]
                .iter()
                .flat_map(|&f| vertices_of(f).map(move |v| f & !(1 << v)))
                .collect();
            by_card[c - 1].extend(facets);
        }
        Ok(SimplicialComplex::from_closed_faces(vertex_count, by_card.into_iter().flatten()))
    }

    pub fn from_maximal_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(faces.len());
        for f in faces {
            let mut m = 0u64;
            for &v in f {
                if v >= vertex_count {
                    return Err(Error::InvalidArgument(format!("vertex {v} out of range 0..{vertex_count}")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        SimplicialComplex::from_generators(vertex_count, masks)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.layers.is_empty()
    }

    /// Dimension (largest face cardinality minus one); `None` when void.
    pub fn dimension(&self) -> Option<i32> {
        if self.is_void() {
            None
        } else {
            Some(self.layers.len() as i32 - 2)
        }
    }

    /// Faces of dimension `q` (cardinality `q + 1`), sorted by mask.
    pub fn faces_of_dim(&self, q: i32) -> &[VertexSet] {
        let c = q + 1;
        if c < 0 {
            return &[];
        }
        self.layers.get(c as usize).map_or(&[], |l| l.as_slice())
    }

    /// All faces, by increasing cardinality.
    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn face_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Face counts by dimension, starting at `q = -1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.layers
            .get(face.count_ones() as usize)
            .is_some_and(|l| l.binary_search(&face).is_ok())
    }

    /// Position of `face` within its dimension layer.
    pub fn index_of(&self, face: VertexSet) -> Option<usize> {
        self.layers.get(face.count_ones() as usize)?.binary_search(&face).ok()
    }

    /// Vertices that occur in some face.
    pub fn support(&self) -> VertexSet {
        self.faces_of_dim(0).iter().fold(0, |a, &f| a | f)
    }

    /// Inclusion-maximal faces, ordered lexicographically by vertex list.
    pub fn maximal_faces(&self) -> &[VertexSet] {
        self.maximal.get_or_init(|| {
            let mut out = Vec::new();
            for (c, layer) in self.layers.iter().enumerate() {
                let above = self.layers.get(c + 1);
                for &f in layer {
                    let covered = above.is_some_and(|up| {
                        (0..self.vertex_count)
                            .filter(|&v| f >> v & 1 == 0)
                            .any(|v| up.binary_search(&(f | 1 << v)).is_ok())
                    });
                    if !covered {
                        out.push(f);
                    }
                }
            }
            out.sort_by_key(|&f| face_vertices(f));
            out
        })
    }

    /// Every facet of every face is present.
    pub fn is_closed(&self) -> bool {
        self.layers.iter().enumerate().skip(1).all(|(c, layer)| {
            layer.iter().all(|&f| {
                vertices_of(f).all(|v| self.layers[c - 1].binary_search(&(f & !(1 << v))).is_ok())
            })
        })
    }

    /// Same faces on a larger vertex universe.
    pub fn with_vertex_count(&self, vertex_count: usize) -> Result<Self> {
        check_capacity(vertex_count)?;
        if vertex_count < self.vertex_count && self.support() >> vertex_count != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot shrink to {vertex_count} vertices: faces use higher vertices"
            )));
        }
        Ok(SimplicialComplex { vertex_count, layers: self.layers.clone(), maximal: OnceLock::new() })
    }

    /// Faces of dimension at most `d`; `skeleton(-1)` is `{∅}`.
    pub fn skeleton(&self, d: i32) -> Result<Self> {
        if d < -1 {
            return Err(Error::InvalidArgument(format!("skeleton dimension {d} < -1")));
        }
        let keep = (d + 2) as usize;
        let layers = self.layers.iter().take(keep).cloned().collect();
        Ok(SimplicialComplex { vertex_count: self.vertex_count, layers, maximal: OnceLock::new() })
    }

    /// Simplicial join; vertices of `other` are placed after those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.is_void() || other.is_void() {
            return Err(Error::VoidComplex);
        }
        let n = self.vertex_count + other.vertex_count;
        check_capacity(n)?;
        let shift = self.vertex_count;
        let faces = self.faces().flat_map(|s| other.faces().map(move |t| s | t << shift));
        Ok(SimplicialComplex::from_closed_faces(n, faces.collect::<Vec<_>>()))
    }

    pub fn link(&self, sigma: VertexSet) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::InvalidArgument(format!("{:?} is not a face", face_vertices(sigma))));
        }
        let faces: Vec<_> = self.faces().filter(|&t| t & sigma == 0 && self.contains(t | sigma)).collect();
        Ok(SimplicialComplex::from_closed_faces(self.vertex_count, faces))
    }

    /// Cone with a fresh apex at index `vertex_count`.
    pub fn cone(&self) -> Result<Self> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let n = self.vertex_count + 1;
        check_capacity(n)?;
        let apex = 1u64 << self.vertex_count;
        let faces: Vec<_> = self.faces().flat_map(|f| [f, f | apex]).collect();
        Ok(SimplicialComplex::from_closed_faces(n, faces))
    }

    /// Face-set union of two complexes on the same vertex set.
    pub fn union(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "union of complexes on {} and {} vertices",
                self.vertex_count, other.vertex_count
            )));
        }
        Ok(SimplicialComplex::from_closed_faces(
            self.vertex_count,
            self.faces().chain(other.faces()).collect::<Vec<_>>(),
        ))
    }

    /// Disjoint union; vertices of `other` are placed after those of `self`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<Self> {
        let n = self.vertex_count + other.vertex_count;
        check_capacity(n)?;
        let shift = self.vertex_count;
        let faces: Vec<_> = self.faces().chain(other.faces().map(|f| f << shift)).collect();
        Ok(SimplicialComplex::from_closed_faces(n, faces))
    }

    /// Reduced Euler characteristic `Σ_q (-1)^q f_q`, the empty face counted at `q = -1`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(self
            .layers
            .iter()
            .enumerate()
            .map(|(c, l)| if c % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
            .sum())
    }

    /// Text form: a `vertices=<n>` header, then one maximal face per line as
    /// space-separated sorted indices. The empty face is written `-`.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices={}\n", self.vertex_count);
        for &f in self.maximal_faces() {
            if f == 0 {
                out.push('-');
            } else {
                let parts: Vec<String> = vertices_of(f).map(|v| v.to_string()).collect();
                out.push_str(&parts.join(" "));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing `vertices=` header".into()))?;
        let n: usize = header
            .strip_prefix("vertices=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
        let mut faces = Vec::new();
        for line in lines {
            if line == "-" {
                faces.push(Vec::new());
                continue;
            }
            let face = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            faces.push(face);
        }
        SimplicialComplex::from_maximal_faces(n, &faces)
    }
}

/// `F_d(G)`: vertex sets inducing a forest of maximum degree at most `d`.
pub fn forest_complex(g: &Graph, bound: DegreeBound) -> SimplicialComplex {
    forest_complex_with_budget(g, bound, None).expect("no budget given")
}

/// As [`forest_complex`], failing once more than `budget` faces are found.
pub fn forest_complex_with_budget(
    g: &Graph,
    bound: DegreeBound,
    budget: Option<usize>,
) -> Result<SimplicialComplex> {
    fn extend(
        g: &Graph,
        bound: DegreeBound,
        face: VertexSet,
        start: usize,
        out: &mut Vec<VertexSet>,
        budget: usize,
    ) -> Result<()> {
        out.push(face);
        if out.len() > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        for v in start..g.order() {
            let next = face | 1 << v;
            if g.induced_forest_check(next, bound) {
                extend(g, bound, next, v + 1, out, budget)?;
            }
        }
        Ok(())
    }
    let mut faces = Vec::new();
    extend(g, bound, 0, 0, &mut faces, budget.unwrap_or(usize::MAX))?;
    Ok(SimplicialComplex::from_closed_faces(g.order(), faces))
}

/// Ordered pairs `(X_i, A_i)` with `A_i` a subcomplex of `X_i`.
#[derive(Clone, Debug)]
pub struct PairFamily {
    pairs: Vec<(SimplicialComplex, SimplicialComplex)>,
}

impl PairFamily {
    pub fn new(pairs: Vec<(SimplicialComplex, SimplicialComplex)>) -> Result<Self> {
        for (i, (x, a)) in pairs.iter().enumerate() {
            if x.vertex_count != a.vertex_count {
                return Err(Error::InvalidArgument(format!("pair {i}: X and A on different vertex sets")));
            }
            if x.is_void() || a.is_void() {
                return Err(Error::InvalidArgument(format!("pair {i}: void complex in family")));
            }
            if !a.faces().all(|f| x.contains(f)) {
                return Err(Error::InvalidArgument(format!("pair {i}: A is not a subcomplex of X")));
            }
        }
        Ok(PairFamily { pairs })
    }

    /// `n` copies of `(x, {∅})`.
    pub fn uniform_empty(x: &SimplicialComplex, n: usize) -> Result<Self> {
        let a = SimplicialComplex::empty_space(x.vertex_count)?;
        PairFamily::new(vec![(x.clone(), a); n])
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(SimplicialComplex, SimplicialComplex)] {
        &self.pairs
    }

    /// First vertex of each block in the polyhedral join.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.pairs.len());
        let mut at = 0;
        for (x, _) in &self.pairs {
            offsets.push(at);
            at += x.vertex_count;
        }
        offsets
    }
}

/// Polyhedral join: the union over `σ ∈ K` of the joins of `X_i` (`i ∈ σ`)
/// and `A_i` (`i ∉ σ`), block `i` occupying the vertices after blocks `0..i`.
pub fn polyhedral_join(k: &SimplicialComplex, family: &PairFamily) -> Result<SimplicialComplex> {
    if family.len() != k.vertex_count {
        return Err(Error::InvalidArgument(format!(
            "family has {} pairs but K has {} vertices",
            family.len(),
            k.vertex_count
        )));
    }
    let total: usize = family.pairs.iter().map(|(x, _)| x.vertex_count).sum();
    check_capacity(total)?;
    if k.is_void() {
        return SimplicialComplex::void(total);
    }
    let offsets = family.block_offsets();
    let mut faces: HashSet<VertexSet> = HashSet::new();
    // J(σ) grows with σ, so maximal faces of K suffice.
    for &sigma in k.maximal_faces() {
        let mut partial = vec![0u64];
        for (i, (x, a)) in family.pairs.iter().enumerate() {
            let factor = if sigma >> i & 1 == 1 { x } else { a };
            let shift = offsets[i];
            let mut next = Vec::with_capacity(partial.len() * factor.face_count());
            for &p in &partial {
                next.extend(factor.faces().map(|f| p | f << shift));
            }
            partial = next;
        }
        faces.extend(partial);
    }
    Ok(SimplicialComplex::from_closed_faces(total, faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    fn point() -> SimplicialComplex {
        SimplicialComplex::simplex(1).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::simplex(3).unwrap().skeleton(1).unwrap()
    }

    #[test]
    fn void_versus_empty_space() {
        let void = SimplicialComplex::void(3).unwrap();
        let empty = SimplicialComplex::empty_space(3).unwrap();
        assert_ne!(void, empty);
        assert!(void.is_void() && !empty.is_void());
        assert_eq!(empty.dimension(), Some(-1));
        assert!(matches!(void.euler_characteristic(), Err(Error::VoidComplex)));
        assert_eq!(empty.euler_characteristic().unwrap(), -1);
        assert_eq!(point().euler_characteristic().unwrap(), 0);
        assert_eq!(hollow_triangle().euler_characteristic().unwrap(), -1);
    }

    #[test]
    fn forest_complex_of_triangle() {
        let k = forest_complex(&make_graph("K3").unwrap(), DegreeBound::Finite(0));
        assert_eq!(k.f_vector(), vec![1, 3]);
    }

    #[test]
    fn forest_complex_budget() {
        let g = make_graph("P10").unwrap();
        let r = forest_complex_with_budget(&g, DegreeBound::Infinite, Some(100));
        assert!(matches!(r, Err(Error::BudgetExceeded { budget: 100 })));
    }

    #[test]
    fn skeleton_examples() {
        let t = hollow_triangle();
        assert_eq!(t.f_vector(), vec![1, 3, 3]);
        assert_eq!(t.skeleton(-1).unwrap(), SimplicialComplex::empty_space(3).unwrap());
        let s = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(s.skeleton(3).unwrap(), s);
        assert!(t.skeleton(-2).is_err());
    }

    #[test]
    fn join_examples() {
        let s0 = SimplicialComplex::discrete(2).unwrap();
        let circle = s0.join(&s0).unwrap();
        assert_eq!(circle.f_vector(), vec![1, 4, 4]);
        let empty = SimplicialComplex::empty_space(0).unwrap();
        assert_eq!(circle.join(&empty).unwrap(), circle);
        let cone = point().join(&circle).unwrap();
        assert_eq!(cone, circle.cone().unwrap().with_vertex_count(5).unwrap().relabel_apex_first());
        assert!(s0.join(&SimplicialComplex::void(1).unwrap()).is_err());
    }

    impl SimplicialComplex {
        /// Move the last vertex to position 0 (test helper comparing cone and join).
        fn relabel_apex_first(&self) -> SimplicialComplex {
            let n = self.vertex_count;
            let top = 1u64 << (n - 1);
            let faces: Vec<_> = self
                .faces()
                .map(|f| ((f & !top) << 1) | u64::from(f & top != 0))
                .collect();
            SimplicialComplex::from_closed_faces(n, faces)
        }
    }

    #[test]
    fn link_examples() {
        let t = hollow_triangle();
        let lk = t.link(0b001).unwrap();
        assert_eq!(lk.faces().collect::<Vec<_>>(), vec![0, 0b010, 0b100]);
        assert_eq!(t.link(0).unwrap(), t);
        let s = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(s.link(0b011).unwrap().faces().collect::<Vec<_>>(), vec![0, 0b100]);
        assert!(t.link(0b111).is_err());
    }

    #[test]
    fn cone_union_disjoint() {
        let empty = SimplicialComplex::empty_space(0).unwrap();
        assert_eq!(empty.cone().unwrap(), point());
        let t = hollow_triangle();
        assert_eq!(t.union(&t).unwrap(), t);
        assert!(t.union(&point()).is_err());
        let two = point().disjoint_union(&point()).unwrap();
        assert_eq!(two, SimplicialComplex::discrete(2).unwrap());
        assert!(SimplicialComplex::void(1).unwrap().cone().is_err());
    }

    #[test]
    fn maximal_faces_regenerate() {
        let g = make_graph("C5").unwrap();
        let k = forest_complex(&g, DegreeBound::Finite(1));
        let maxes: Vec<Vec<usize>> = k.maximal_faces().iter().map(|&f| face_vertices(f)).collect();
        assert_eq!(SimplicialComplex::from_maximal_faces(5, &maxes).unwrap(), k);
    }

    #[test]
    fn text_format() {
        let t = hollow_triangle();
        assert_eq!(t.to_text(), "vertices=3\n0 1\n0 2\n1 2\n");
        assert_eq!(SimplicialComplex::from_text(&t.to_text()).unwrap(), t);
        let e = SimplicialComplex::empty_space(2).unwrap();
        assert_eq!(e.to_text(), "vertices=2\n-\n");
        assert_eq!(SimplicialComplex::from_text("vertices=2\n-\n").unwrap(), e);
        assert!(SimplicialComplex::from_text("vertices=2\n0 3\n").is_err());
        assert!(SimplicialComplex::from_text("0 1\n").is_err());
        let v = SimplicialComplex::void(4).unwrap();
        assert_eq!(SimplicialComplex::from_text(&v.to_text()).unwrap(), v);
    }

    #[test]
    fn polyhedral_join_over_full_simplex_is_join() {
        let x = SimplicialComplex::discrete(2).unwrap();
        let fam = PairFamily::uniform_empty(&x, 3).unwrap();
        let z = polyhedral_join(&SimplicialComplex::simplex(3).unwrap(), &fam).unwrap();
        let direct = x.join(&x).unwrap().join(&x).unwrap();
        assert_eq!(z, direct);
    }

    #[test]
    fn polyhedral_join_octahedron_skeleton() {
        let x = SimplicialComplex::discrete(2).unwrap();
        let fam = PairFamily::uniform_empty(&x, 3).unwrap();
        let k = SimplicialComplex::simplex(3).unwrap().skeleton(1).unwrap();
        let z = polyhedral_join(&k, &fam).unwrap();
        assert_eq!(z.f_vector(), vec![1, 6, 12]);
        let g = make_graph("K2,2,2").unwrap();
        assert!(g.edges().iter().all(|&(u, v)| z.contains(1 << u | 1 << v)));
    }

    #[test]
    fn polyhedral_join_errors() {
        let x = SimplicialComplex::discrete(2).unwrap();
        let fam = PairFamily::uniform_empty(&x, 2).unwrap();
        assert!(polyhedral_join(&SimplicialComplex::simplex(3).unwrap(), &fam).is_err());
        let big = PairFamily::uniform_empty(&SimplicialComplex::discrete(30).unwrap(), 3).unwrap();
        assert!(matches!(
            polyhedral_join(&SimplicialComplex::simplex(3).unwrap(), &big),
            Err(Error::Capacity { .. })
        ));
        assert!(PairFamily::new(vec![(SimplicialComplex::discrete(2).unwrap(), SimplicialComplex::simplex(2).unwrap())]).is_err());
    }

    #[test]
    fn polyhedral_join_with_nonempty_subcomplexes() {
        // K = two points, X = edge, A = one endpoint: union of X*A and A*X.
        let x = SimplicialComplex::simplex(2).unwrap();
        let a = SimplicialComplex::from_maximal_faces(2, &[vec![0]]).unwrap();
        let fam = PairFamily::new(vec![(x.clone(), a.clone()), (x, a)]).unwrap();
        let z = polyhedral_join(&SimplicialComplex::discrete(2).unwrap(), &fam).unwrap();
        assert_eq!(z.maximal_faces(), &[0b0111, 0b1101]);
    }
}
