//! The non-commuting graph, ω by clique search and by centralizer covers,
//! and the checks tying centralizers to ω in AC-groups.

pub mod clique;

use std::fmt::Write as _;

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, GroupTable};
use crate::omega::{CoverMember, Method, OmegaResult};
use crate::structure::{self, Decomposition};

/// Graph on `G ∖ Z(G)`; two vertices are adjacent iff they do not commute.
#[derive(Clone, Debug)]
pub struct NonCommutingGraph {
    pub name: String,
    /// Non-central elements in increasing index order.
    pub vertices: Vec<Elem>,
    pub labels: Vec<String>,
    /// Adjacency over vertex positions.
    adjacency: Vec<BitSet>,
    edge_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(ExportFormat::Dimacs),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::Parse(format!("unknown export format {other:?}"))),
        }
    }
}

impl NonCommutingGraph {
    pub fn build(g: &GroupTable) -> Result<Self> {
        let center = g.center();
        if center.len() == g.order() {
            return Err(Error::AbelianGroup);
        }
        let vertices: Vec<Elem> = g.elements().filter(|&x| !center.contains(x)).collect();
        let v = vertices.len();
        let mut adjacency = vec![BitSet::new(v); v];
        let mut edge_count = 0;
        for i in 0..v {
            for j in i + 1..v {
                if !g.commutes(vertices[i], vertices[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                    edge_count += 1;
                }
            }
        }
        let labels = vertices.iter().map(|&x| g.label(x)).collect();
        Ok(NonCommutingGraph { name: g.name().to_string(), vertices, labels, adjacency, edge_count })
    }

    /// Builds a graph directly from an edge list over `0..n`, with vertex
    /// `i` standing for element `i`. Used for fixtures.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![BitSet::new(n); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u != v && adjacency[u].insert(v) {
                adjacency[v].insert(u);
                edge_count += 1;
            }
        }
        NonCommutingGraph {
            name: "graph".into(),
            vertices: (0..n).collect(),
            labels: (0..n).map(|i| i.to_string()).collect(),
            adjacency,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Adjacency of vertex positions `i` and `j`.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count()
    }

    pub fn adjacency_rows(&self) -> &[BitSet] {
        &self.adjacency
    }

    /// Edges as position pairs `(u, v)`, `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn to_result(&self, positions: Vec<usize>) -> OmegaResult {
        let mut witness: Vec<Elem> = positions.into_iter().map(|p| self.vertices[p]).collect();
        witness.sort_unstable();
        OmegaResult { value: witness.len(), witness: Some(witness), method: Method::Clique, certificate: None }
    }

    /// Exact clique number with a witness; single-threaded and
    /// deterministic.
    pub fn max_clique(&self) -> Result<OmegaResult> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.to_result(clique::max_clique(&self.adjacency)))
    }

    /// Same value as [`Self::max_clique`] using the rayon pool.
    pub fn max_clique_parallel(&self) -> Result<OmegaResult> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.to_result(clique::max_clique_parallel(&self.adjacency)))
    }

    /// Clique number by full subset enumeration (small graphs only).
    pub fn naive_max_clique(&self) -> Result<OmegaResult> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.to_result(clique::naive_max_clique(&self.adjacency)?))
    }

    pub fn export(&self, format: ExportFormat) -> Result<String> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut out = String::new();
        match format {
            ExportFormat::Dimacs => {
                writeln!(out, "p edge {} {}", self.vertex_count(), self.edge_count).unwrap();
                for (u, v) in self.edges() {
                    writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
                }
            }
            ExportFormat::Dot => {
                writeln!(out, "graph \"{}\" {{", escape(&self.name)).unwrap();
                for (i, label) in self.labels.iter().enumerate() {
                    writeln!(out, "  v{} [label=\"{}\"];", self.vertices[i], escape(label)).unwrap();
                }
                for (u, v) in self.edges() {
                    writeln!(out, "  v{} -- v{};", self.vertices[u], self.vertices[v]).unwrap();
                }
                writeln!(out, "}}").unwrap();
            }
        }
        Ok(out)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// First non-central element whose centralizer is non-abelian.
fn first_non_ac_element(g: &GroupTable, center: &ElementSet) -> Option<Elem> {
    g.elements()
        .filter(|&x| !center.contains(x))
        .find(|&x| !g.is_abelian(&g.centralizer(x)).expect("centralizers are subgroups"))
}

/// Every non-central element has an abelian centralizer.
pub fn is_ac_group(g: &GroupTable) -> Result<bool> {
    let center = g.center();
    if center.len() == g.order() {
        return Err(Error::AbelianGroup);
    }
    Ok(first_non_ac_element(g, &center).is_none())
}

/// Both sides of the AC characterization, evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AcEquivalence {
    pub is_ac: bool,
    /// Non-central commuting elements always have equal centralizers.
    pub commuting_pairs_share_centralizer: bool,
}

impl AcEquivalence {
    pub fn holds(&self) -> bool {
        self.is_ac == self.commuting_pairs_share_centralizer
    }
}

pub fn ac_equivalence(g: &GroupTable) -> Result<AcEquivalence> {
    let is_ac = is_ac_group(g)?;
    let center = g.center();
    let noncentral: Vec<Elem> = g.elements().filter(|&x| !center.contains(x)).collect();
    let cents: Vec<ElementSet> = noncentral.iter().map(|&x| g.centralizer(x)).collect();
    let share = (0..noncentral.len()).all(|i| {
        (i + 1..noncentral.len())
            .all(|j| !g.commutes(noncentral[i], noncentral[j]) || cents[i] == cents[j])
    });
    Ok(AcEquivalence { is_ac, commuting_pairs_share_centralizer: share })
}

/// Whether "G is AC ⟺ commuting non-central elements share centralizers"
/// holds for `g`.
pub fn verify_ac_equivalence(g: &GroupTable) -> Result<bool> {
    ac_equivalence(g).map(|e| e.holds())
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub representative: Elem,
    pub centralizer: ElementSet,
}

/// Distinct centralizers of non-central elements.
#[derive(Clone, Debug)]
pub struct CentralizerFamily {
    pub members: Vec<FamilyMember>,
    pub covers_group: bool,
    /// Any two distinct members meet exactly in `Z(G)`.
    pub pairwise_intersections_are_center: bool,
}

impl CentralizerFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representatives(&self) -> Vec<Elem> {
        self.members.iter().map(|m| m.representative).collect()
    }
}

pub fn centralizer_family(g: &GroupTable) -> Result<CentralizerFamily> {
    let center = g.center();
    if center.len() == g.order() {
        return Err(Error::AbelianGroup);
    }
    let mut members: Vec<FamilyMember> = Vec::new();
    for x in g.elements().filter(|&x| !center.contains(x)) {
        let c = g.centralizer(x);
        if !members.iter().any(|m| m.centralizer == c) {
            members.push(FamilyMember { representative: x, centralizer: c });
        }
    }
    let union = members.iter().fold(center.clone(), |acc, m| acc.union(&m.centralizer));
    let covers_group = union.len() == g.order();
    let pairwise_intersections_are_center = members.iter().enumerate().all(|(i, a)| {
        members[i + 1..].iter().all(|b| a.centralizer.intersection(&b.centralizer) == center)
    });
    Ok(CentralizerFamily { members, covers_group, pairwise_intersections_are_center })
}

/// ω as the number of distinct proper centralizers, valid when G is an
/// AC-group covered by them; the representatives are the witness.
pub fn omega_via_centralizers(g: &GroupTable) -> Result<OmegaResult> {
    let center = g.center();
    if center.len() == g.order() {
        return Err(Error::AbelianGroup);
    }
    if let Some(element) = first_non_ac_element(g, &center) {
        return Err(Error::NotACGroup { element });
    }
    let family = centralizer_family(g)?;
    if !family.covers_group {
        return Err(Error::NoCover);
    }
    let witness = family.representatives();
    if witness.iter().enumerate().any(|(i, &x)| witness[i + 1..].iter().any(|&y| g.commutes(x, y))) {
        return Err(Error::StructureViolation("centralizer representatives commute".into()));
    }
    let certificate = family
        .members
        .iter()
        .map(|m| CoverMember {
            representative: m.representative,
            order: m.centralizer.len(),
            members: m.centralizer.to_vec(),
        })
        .collect();
    Ok(OmegaResult { value: witness.len(), witness: Some(witness), method: Method::Centralizers, certificate: Some(certificate) })
}

/// The covering computation for a minimal non-abelian `PQ` group:
/// `G = C(a_1) ∪ … ∪ C(a_m) ∪ C(b)` with the a_i generating the Sylow
/// p-subgroups and `1 ≠ b ∈ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCountReport {
    pub m: usize,
    pub q_order: usize,
    pub center_order: usize,
    /// `C(a_i) = P_i` for every Sylow p-subgroup `P_i = ⟨a_i⟩`.
    pub sylow_generators_self_centralizing: bool,
    /// `|C(b)| = |Z|·q^β` for every nonidentity `b ∈ Q`.
    pub q_centralizer_orders: bool,
    /// `Σ (|C(a_i)| − |Z|) + |C(b)|`.
    pub covering_count: usize,
    pub covering_count_is_order: bool,
    pub m_is_q_order: bool,
    pub family_size: usize,
    pub family_size_is_q_order_plus_one: bool,
    pub omega_clique: usize,
    pub omega_centralizers: usize,
    pub omega_formula: usize,
    pub methods_agree: bool,
}

impl CoverCountReport {
    pub fn all(&self) -> bool {
        self.sylow_generators_self_centralizing
            && self.q_centralizer_orders
            && self.covering_count_is_order
            && self.m_is_q_order
            && self.family_size_is_q_order_plus_one
            && self.methods_agree
    }
}

pub fn verify_cover_count(g: &GroupTable) -> Result<CoverCountReport> {
    let d = match structure::decompose(g)? {
        Decomposition::PGroup { p } => return Err(Error::IsPGroup { p }),
        Decomposition::Pq(d) => d,
    };
    let z = d.center.len();
    let q_order = d.q_order();
    let conjugates = g.sylow_conjugates(&d.p_sylow)?;
    let mut self_centralizing = true;
    let mut covering_count = 0;
    for p_i in &conjugates {
        let a_i = g
            .cyclic_generator(p_i)
            .ok_or_else(|| Error::StructureViolation("Sylow p-subgroup is not cyclic".into()))?;
        let c = g.centralizer(a_i);
        self_centralizing &= c == *p_i;
        covering_count += c.len() - z;
    }
    let nonidentity_q: Vec<Elem> = d.q_sylow.iter().filter(|&b| b != g.identity()).collect();
    let q_centralizer_orders = nonidentity_q.iter().all(|&b| g.centralizer(b).len() == z * q_order);
    let b = nonidentity_q[0];
    covering_count += g.centralizer(b).len();

    let family = centralizer_family(g)?;
    let omega_clique = NonCommutingGraph::build(g)?.max_clique()?.value;
    let omega_centralizers = omega_via_centralizers(g)?.value;
    let omega_formula = structure::omega_formula(g)?.value;
    let expected = q_order + 1;
    Ok(CoverCountReport {
        m: conjugates.len(),
        q_order,
        center_order: z,
        sylow_generators_self_centralizing: self_centralizing,
        q_centralizer_orders,
        covering_count,
        covering_count_is_order: covering_count == g.order(),
        m_is_q_order: conjugates.len() == q_order,
        family_size: family.len(),
        family_size_is_q_order_plus_one: family.len() == expected,
        omega_clique,
        omega_centralizers,
        omega_formula,
        methods_agree: omega_clique == expected && omega_centralizers == expected && omega_formula == expected,
    })
}

/// Whether any single element of G extends `witness` to a larger pairwise
/// non-commuting set.
pub fn witness_is_extendable(g: &GroupTable, witness: &[Elem]) -> bool {
    g.elements().any(|x| !witness.contains(&x) && witness.iter().all(|&w| !g.commutes(x, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::perm::{from_permutation_generators, Perm};
    use crate::DEFAULT_ORDER_CAP;

    fn s3() -> GroupTable {
        let gens = [Perm::parse_cycles("(1 2)").unwrap(), Perm::parse_cycles("(1 2 3)").unwrap()];
        from_permutation_generators(&gens, DEFAULT_ORDER_CAP).unwrap()
    }

    fn s4() -> GroupTable {
        let gens = [Perm::parse_cycles("(1 2 3 4)").unwrap(), Perm::parse_cycles("(1 2)").unwrap()];
        from_permutation_generators(&gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn graph_examples() {
        let g = s3();
        let graph = NonCommutingGraph::build(&g).unwrap();
        assert_eq!((graph.vertex_count(), graph.edge_count()), (5, 9));
        let threes: Vec<usize> =
            (0..5).filter(|&i| g.element_order(graph.vertices[i]) == 3).collect();
        assert_eq!(threes.len(), 2);
        assert!(!graph.adjacent(threes[0], threes[1]));
        for i in (0..5).filter(|i| !threes.contains(i)) {
            assert!(threes.iter().all(|&t| graph.adjacent(i, t)));
        }
        let q8 = quaternion8();
        let graph = NonCommutingGraph::build(&q8).unwrap();
        assert_eq!((graph.vertex_count(), graph.edge_count()), (6, 12));
        for i in 0..6 {
            for j in 0..6 {
                let (x, y) = (graph.vertices[i], graph.vertices[j]);
                assert_eq!(graph.adjacent(i, j), !q8.cyclic_subgroup(x).contains(y));
            }
        }
        assert_eq!(NonCommutingGraph::build(&cyclic(5).unwrap()).unwrap_err(), Error::AbelianGroup);
    }

    #[test]
    fn degree_identity() {
        for g in [s3(), s4(), quaternion8(), minimal_nonabelian_pq(2, 2, 3).unwrap()] {
            let graph = NonCommutingGraph::build(&g).unwrap();
            for (i, &v) in graph.vertices.iter().enumerate() {
                assert_eq!(graph.degree(i), g.order() - g.centralizer(v).len());
            }
        }
    }

    #[test]
    fn clique_examples() {
        let g = s3();
        let r = NonCommutingGraph::build(&g).unwrap().max_clique().unwrap();
        assert_eq!(r.value, 4);
        let w = r.witness.clone().unwrap();
        assert_eq!(w.iter().filter(|&&x| g.element_order(x) == 2).count(), 3);
        assert_eq!(w.iter().filter(|&&x| g.element_order(x) == 3).count(), 1);
        assert!(r.witness_is_valid(&g));

        let k4: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(NonCommutingGraph::from_edges(4, &k4).max_clique().unwrap().value, 4);
        let a4 = minimal_nonabelian_pq(3, 1, 2).unwrap();
        let graph = NonCommutingGraph::build(&a4).unwrap();
        assert_eq!(graph.vertex_count(), 11);
        assert_eq!(graph.max_clique().unwrap().value, 5);
        assert_eq!(graph.naive_max_clique().unwrap().value, 5);
        assert_eq!(NonCommutingGraph::from_edges(0, &[]).max_clique().unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn ac_examples() {
        assert!(is_ac_group(&s3()).unwrap());
        assert!(!is_ac_group(&s4()).unwrap());
        assert_eq!(is_ac_group(&cyclic(4).unwrap()), Err(Error::AbelianGroup));
        let s4 = s4();
        let t = s4.elements().find(|&x| s4.label(x) == "(1 2)").unwrap();
        let dt = s4.elements().find(|&x| s4.label(x) == "(1 2)(3 4)").unwrap();
        assert_eq!(s4.centralizer(t).len(), 4);
        assert!(s4.is_abelian(&s4.centralizer(t)).unwrap());
        assert_eq!(s4.centralizer(dt).len(), 8);
        assert!(!s4.is_abelian(&s4.centralizer(dt)).unwrap());
    }

    #[test]
    fn ac_equivalence_examples() {
        let e = ac_equivalence(&s3()).unwrap();
        assert!(e.is_ac && e.commuting_pairs_share_centralizer);
        let e = ac_equivalence(&s4()).unwrap();
        assert!(!e.is_ac && !e.commuting_pairs_share_centralizer);
        assert!(verify_ac_equivalence(&minimal_nonabelian_pq(3, 1, 2).unwrap()).unwrap());
        let s4 = s4();
        let a = s4.elements().find(|&x| s4.label(x) == "(1 2)").unwrap();
        // (1 2) and (3 4) share the centralizer {e, (1 2), (3 4), (1 2)(3 4)};
        // (1 2) and (1 2)(3 4) commute but their centralizers differ.
        let b = s4.elements().find(|&x| s4.label(x) == "(3 4)").unwrap();
        assert_eq!(s4.centralizer(a), s4.centralizer(b));
        let c = s4.elements().find(|&x| s4.label(x) == "(1 2)(3 4)").unwrap();
        assert!(s4.commutes(a, c));
        assert_ne!(s4.centralizer(a), s4.centralizer(c));
    }

    #[test]
    fn family_examples() {
        let f = centralizer_family(&s3()).unwrap();
        let mut sizes: Vec<usize> = f.members.iter().map(|m| m.centralizer.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3]);
        assert!(f.covers_group && f.pairwise_intersections_are_center);

        let f = centralizer_family(&minimal_nonabelian_pq(3, 1, 2).unwrap()).unwrap();
        let mut sizes: Vec<usize> = f.members.iter().map(|m| m.centralizer.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
        assert!(f.covers_group);

        let f = centralizer_family(&minimal_nonabelian_pq(2, 2, 3).unwrap()).unwrap();
        let mut sizes: Vec<usize> = f.members.iter().map(|m| m.centralizer.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4, 4, 6]);
        assert!(f.covers_group && f.pairwise_intersections_are_center);
    }

    #[test]
    fn centralizer_method() {
        let r = omega_via_centralizers(&s3()).unwrap();
        assert_eq!((r.value, r.method), (4, Method::Centralizers));
        assert!(r.witness_is_valid(&s3()));
        let g80 = minimal_nonabelian_pq(5, 1, 2).unwrap();
        let r = omega_via_centralizers(&g80).unwrap();
        assert_eq!(r.value, 17);
        let cert = r.certificate.unwrap();
        assert_eq!(cert.iter().filter(|c| c.order == 5).count(), 16);
        assert_eq!(cert.iter().filter(|c| c.order == 16).count(), 1);
        assert!(matches!(omega_via_centralizers(&s4()), Err(Error::NotACGroup { .. })));
    }

    #[test]
    fn cover_count_examples() {
        for (p, a, q, count, omega) in [(2, 1, 3, 6, 4), (3, 1, 2, 12, 5), (2, 2, 3, 12, 4)] {
            let g = minimal_nonabelian_pq(p, a, q).unwrap();
            let r = verify_cover_count(&g).unwrap();
            assert!(r.all(), "{r:?}");
            assert_eq!(r.covering_count, count);
            assert_eq!(r.omega_clique, omega);
        }
        assert_eq!(verify_cover_count(&quaternion8()).unwrap_err(), Error::IsPGroup { p: 2 });
        assert_eq!(verify_cover_count(&s4()).unwrap_err(), Error::NotMinimalNonAbelian);
    }

    #[test]
    fn exports() {
        let graph = NonCommutingGraph::build(&s3()).unwrap();
        let d = graph.export(ExportFormat::Dimacs).unwrap();
        assert!(d.starts_with("p edge 5 9\n"));
        assert_eq!(d.lines().filter(|l| l.starts_with("e ")).count(), 9);
        let single = NonCommutingGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(single.export(ExportFormat::Dimacs).unwrap(), "p edge 2 1\ne 1 2\n");
        let q8 = NonCommutingGraph::build(&quaternion8()).unwrap();
        assert!(q8.export(ExportFormat::Dimacs).unwrap().starts_with("p edge 6 12\n"));
        let dot = q8.export(ExportFormat::Dot).unwrap();
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 6);
        assert!(dot.contains("label=\"i\""));
        assert_eq!(NonCommutingGraph::from_edges(0, &[]).export(ExportFormat::Dot), Err(Error::EmptyGraph));
        assert_eq!("svg".parse::<ExportFormat>().unwrap_err(), Error::Parse("unknown export format \"svg\"".into()));
    }
}
