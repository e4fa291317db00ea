//! Recognition of minimal non-abelian groups and the `G = PQ` structure of
//! the ones whose order is not a prime power.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, GroupTable};
use crate::omega::{Method, OmegaResult};

/// True iff G is non-abelian and every non-commuting pair generates G.
///
/// A proper non-abelian subgroup contains a non-commuting pair, and that
/// pair generates a proper subgroup; conversely if every non-commuting pair
/// generates G then every proper subgroup is abelian.
pub fn is_minimal_non_abelian(g: &GroupTable) -> bool {
    if g.is_commutative() {
        return false;
    }
    let n = g.order();
    (0..n).into_par_iter().all(|x| {
        (x + 1..n)
            .filter(|&y| !g.commutes(x, y))
            .all(|y| g.closure_of(&[x, y]).len() == n)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    PGroup,
    PqGroup,
    NotApplicable,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::PGroup => "p-group",
            GroupKind::PqGroup => "pq-group",
            GroupKind::NotApplicable => "not-applicable",
        }
    }
}

/// `G = PQ`: P a cyclic Sylow p-subgroup, Q the normal elementary abelian
/// Sylow q-subgroup.
#[derive(Clone, Debug)]
pub struct PqDecomposition {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    pub beta: u32,
    pub p_sylow: ElementSet,
    pub q_sylow: ElementSet,
    /// Generator `a` of `P`.
    pub p_generator: Elem,
    /// Number of Sylow p-subgroups.
    pub m: usize,
    pub center: ElementSet,
}

impl PqDecomposition {
    /// `q^β = |Q|`.
    pub fn q_order(&self) -> usize {
        self.q_sylow.len()
    }
}

#[derive(Clone, Debug)]
pub enum Decomposition {
    PGroup { p: u64 },
    Pq(PqDecomposition),
}

/// Structural conclusions for a minimal non-abelian group of non-prime-power
/// order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PqStructureChecks {
    pub two_primes: bool,
    pub cyclic_p: bool,
    pub elementary_abelian_q: bool,
    pub minimal_normal_q: bool,
    pub normal_q: bool,
}

impl PqStructureChecks {
    pub fn all(&self) -> bool {
        self.two_primes && self.cyclic_p && self.elementary_abelian_q && self.minimal_normal_q && self.normal_q
    }

    fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.two_primes, "two_primes"),
            (self.cyclic_p, "cyclic_p"),
            (self.elementary_abelian_q, "elementary_abelian_q"),
            (self.minimal_normal_q, "minimal_normal_q"),
            (self.normal_q, "normal_q"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

/// Facts about P, Q and the center of a `PQ` group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SylowFacts {
    /// `G′ = Q`.
    pub derived_is_q: bool,
    /// `G′ ∩ Z(G) = 1` and `Z(G)` is a p-group.
    pub derived_meets_center_trivially: bool,
    /// `C_G(P) = N_G(P) = P`.
    pub p_self_normalizing: bool,
    /// `C_G(b) = Z(G)·Q` with `|C_G(b)| = |Z|·|Q|` for every `1 ≠ b ∈ Q`.
    pub q_centralizers: bool,
}

impl SylowFacts {
    pub fn all(&self) -> bool {
        self.derived_is_q && self.derived_meets_center_trivially && self.p_self_normalizing && self.q_centralizers
    }
}

/// Checks that `s` is a nontrivial normal subgroup in which the normal
/// closure of every nonidentity element is all of `s`.
pub fn is_minimal_normal(g: &GroupTable, s: &ElementSet) -> Result<bool> {
    if !g.is_normal(s)? {
        return Err(Error::NotNormal);
    }
    if s.len() <= 1 {
        return Err(Error::TrivialSubgroup);
    }
    Ok(s.iter()
        .filter(|&x| x != g.identity())
        .all(|x| g.normal_closure(&ElementSet::from_elements(g.order(), [x])) == *s))
}

fn pq_checks(g: &GroupTable, p_sylow: &ElementSet, q_sylow: &ElementSet, two_primes: bool) -> Result<PqStructureChecks> {
    let normal_q = g.is_normal(q_sylow)?;
    Ok(PqStructureChecks {
        two_primes,
        cyclic_p: g.subgroup_shape(p_sylow)?.is_cyclic,
        elementary_abelian_q: g.subgroup_shape(q_sylow)?.elementary_abelian.is_some(),
        minimal_normal_q: normal_q && q_sylow.len() > 1 && is_minimal_normal(g, q_sylow)?,
        normal_q,
    })
}

/// Splits a minimal non-abelian group into its p-group or `PQ` form.
/// q is the prime whose Sylow subgroup is normal.
pub fn decompose(g: &GroupTable) -> Result<Decomposition> {
    if !is_minimal_non_abelian(g) {
        return Err(Error::NotMinimalNonAbelian);
    }
    decompose_unchecked(g).map(|(d, _)| d)
}

/// Like [`decompose`] but without the minimality test, also returning the
/// structure checks (all true on success).
pub fn decompose_unchecked(g: &GroupTable) -> Result<(Decomposition, PqStructureChecks)> {
    let factors = arith::factorize(g.order() as u64);
    let (r1, r2) = match factors.as_slice() {
        [(p, _)] => return Ok((Decomposition::PGroup { p: *p }, PqStructureChecks::default())),
        [(a, _), (b, _)] => (*a, *b),
        _ => {
            return Err(Error::StructureViolation(format!(
                "order {} has {} distinct prime divisors",
                g.order(),
                factors.len()
            )))
        }
    };
    let s1 = g.sylow_subgroup(r1)?;
    let s2 = g.sylow_subgroup(r2)?;
    let (p, q, p_sylow, q_sylow) = match (g.is_normal(&s1)?, g.is_normal(&s2)?) {
        (false, true) => (r1, r2, s1, s2),
        (true, false) => (r2, r1, s2, s1),
        (a, b) => {
            return Err(Error::StructureViolation(format!(
                "expected exactly one normal Sylow subgroup, Sylow-{r1} normal: {a}, Sylow-{r2} normal: {b}"
            )))
        }
    };
    let checks = pq_checks(g, &p_sylow, &q_sylow, true)?;
    if !checks.all() {
        return Err(Error::StructureViolation(format!("failed: {}", checks.failures().join(", "))));
    }
    let (alpha, _) = arith::p_part(p_sylow.len() as u64, p);
    let (beta, _) = arith::p_part(q_sylow.len() as u64, q);
    let p_generator = g
        .cyclic_generator(&p_sylow)
        .ok_or_else(|| Error::StructureViolation("Sylow p-subgroup has no generator".into()))?;
    let m = g.sylow_conjugates(&p_sylow)?.len();
    Ok((
        Decomposition::Pq(PqDecomposition {
            p,
            alpha,
            q,
            beta,
            p_sylow,
            q_sylow,
            p_generator,
            m,
            center: g.center(),
        }),
        checks,
    ))
}

/// Checks `G′ = Q`, `G′ ∩ Z = 1` with `Z` a p-group, `C_G(P) = N_G(P) = P`,
/// and `C_G(b) = Z·Q` for every nonidentity `b ∈ Q`.
pub fn verify_sylow_facts(g: &GroupTable, d: &PqDecomposition) -> Result<SylowFacts> {
    for (name, s) in [("P", &d.p_sylow), ("Q", &d.q_sylow), ("Z", &d.center)] {
        if s.universe_order() != g.order() || !g.is_subgroup(s) {
            return Err(Error::DecompositionMismatch(format!("{name} is not a subgroup of this group")));
        }
    }
    if d.p_sylow.len() * d.q_sylow.len() != g.order() {
        return Err(Error::DecompositionMismatch(format!(
            "|P|·|Q| = {} but |G| = {}",
            d.p_sylow.len() * d.q_sylow.len(),
            g.order()
        )));
    }
    let center = g.center();
    if center != d.center {
        return Err(Error::DecompositionMismatch("recorded center differs from Z(G)".into()));
    }
    let derived = g.derived_subgroup();
    let derived_is_q = derived == d.q_sylow;
    let z_is_p_group = center.len() == 1 || arith::prime_power_base(center.len() as u64) == Some(d.p);
    let derived_meets_center_trivially = derived.intersection(&center).len() == 1 && z_is_p_group;
    let p_self_normalizing = g.centralizer_of_set(&d.p_sylow) == d.p_sylow && g.normalizer(&d.p_sylow) == d.p_sylow;
    let zq = g.product_set(&center, &d.q_sylow);
    let q_centralizers = d.q_sylow.iter().filter(|&b| b != g.identity()).all(|b| {
        let c = g.centralizer(b);
        c == zq && c.len() == center.len() * d.q_sylow.len()
    });
    Ok(SylowFacts { derived_is_q, derived_meets_center_trivially, p_self_normalizing, q_centralizers })
}

/// ω from the closed values: `p + 1` for p-groups, `|Q| + 1` otherwise.
pub fn omega_formula(g: &GroupTable) -> Result<OmegaResult> {
    let value = match decompose(g)? {
        Decomposition::PGroup { p } => p as usize + 1,
        Decomposition::Pq(d) => d.q_order() + 1,
    };
    Ok(OmegaResult { value, witness: None, method: Method::Formula, certificate: None })
}

/// Structural summary of one group.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub group: String,
    pub order: usize,
    pub center_order: usize,
    pub minimal_non_abelian: bool,
    pub kind: GroupKind,
    pub p: Option<u64>,
    pub alpha: Option<u32>,
    pub q: Option<u64>,
    pub beta: Option<u32>,
    pub m: Option<usize>,
    pub lemma_2_4: Option<SylowFacts>,
    pub theorem_2_3: Option<PqStructureChecks>,
    #[serde(skip)]
    pub decomposition: Option<PqDecomposition>,
}

impl StructureReport {
    /// Structure booleans all hold whenever the group is a minimal
    /// non-abelian `PQ` group.
    pub fn consistent(&self) -> bool {
        match self.kind {
            GroupKind::PqGroup => {
                self.lemma_2_4.is_some_and(|c| c.all()) && self.theorem_2_3.is_some_and(|c| c.all())
            }
            _ => true,
        }
    }
}

pub fn analyze(g: &GroupTable) -> Result<StructureReport> {
    let mut report = StructureReport {
        group: g.name().to_string(),
        order: g.order(),
        center_order: g.center().len(),
        minimal_non_abelian: is_minimal_non_abelian(g),
        kind: GroupKind::NotApplicable,
        p: None,
        alpha: None,
        q: None,
        beta: None,
        m: None,
        lemma_2_4: None,
        theorem_2_3: None,
        decomposition: None,
    };
    if !report.minimal_non_abelian {
        return Ok(report);
    }
    match decompose_unchecked(g)? {
        (Decomposition::PGroup { p }, _) => {
            report.kind = GroupKind::PGroup;
            report.p = Some(p);
        }
        (Decomposition::Pq(d), checks) => {
            report.kind = GroupKind::PqGroup;
            report.p = Some(d.p);
            report.alpha = Some(d.alpha);
            report.q = Some(d.q);
            report.beta = Some(d.beta);
            report.m = Some(d.m);
            report.theorem_2_3 = Some(checks);
            report.lemma_2_4 = Some(verify_sylow_facts(g, &d)?);
            report.decomposition = Some(d);
        }
    }
    Ok(report)
}
