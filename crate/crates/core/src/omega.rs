//! The result type shared by every ω method, and the `auto` dispatcher.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};
use crate::ncgraph::{self, NonCommutingGraph};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Clique,
    Centralizers,
    Formula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Clique => "clique",
            Method::Centralizers => "centralizers",
            Method::Formula => "formula",
        }
    }
}

/// One member of a centralizer cover: `C_G(representative)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMember {
    pub representative: Elem,
    pub order: usize,
    pub members: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaResult {
    pub value: usize,
    /// Pairwise non-commuting elements, increasing index order.
    pub witness: Option<Vec<Elem>>,
    pub method: Method,
    /// The covering centralizers, for [`Method::Centralizers`].
    pub certificate: Option<Vec<CoverMember>>,
}

impl OmegaResult {
    /// All witness pairs non-commute, no witness is central, and the size
    /// matches the value. Trivially true without a witness.
    pub fn witness_is_valid(&self, g: &GroupTable) -> bool {
        let Some(w) = &self.witness else { return true };
        let center = g.center();
        w.len() == self.value
            && w.iter().all(|&x| x < g.order() && !center.contains(x))
            && w.iter().enumerate().all(|(i, &x)| w[i + 1..].iter().all(|&y| !g.commutes(x, y)))
    }
}

/// Formula when the group is minimal non-abelian, then the centralizer
/// cover when it is an AC-group, then exact clique search.
pub fn omega_auto(g: &GroupTable, threads: usize) -> Result<OmegaResult> {
    if g.is_commutative() {
        return Err(Error::AbelianGroup);
    }
    if structure::is_minimal_non_abelian(g) {
        return structure::omega_formula(g);
    }
    match ncgraph::omega_via_centralizers(g) {
        Ok(r) => Ok(r),
        Err(Error::NotACGroup { .. } | Error::NoCover) => {
            let graph = NonCommutingGraph::build(g)?;
            if threads == 1 {
                graph.max_clique()
            } else {
                graph.max_clique_parallel()
            }
        }
        Err(e) => Err(e),
    }
}
