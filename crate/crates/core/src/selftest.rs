//! Worked examples reproduced byte-for-byte, shared by the CLI `selftest`
//! subcommand and the integration tests.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::{graph_bij, n_expansion, reversal_sets, Decomposition};
use crate::digraph::{cie, Digraph, UndirectedCycle};
use crate::gamma::{gamma_nc, mp_set};
use crate::kerov::DecoratedGraph;
use crate::setcomp::{delta_of_word, phi_c, SemiLengthView};
use crate::wqsym::{convert, Basis};
use crate::{Rational, Result};

/// Outcome of one reproduced example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(name: &'static str, expected: &str, actual: Result<String>) -> Check {
    let actual = actual.unwrap_or_else(|e| format!("error: {e}"));
    Check { name, expected: expected.to_string(), actual }
}

/// The graph with edges 4→2, 6→2, 6→1, 2→3, 3→5, 1→5, 1→7, 7→5.
pub fn seven_vertex_graph() -> Digraph {
    Digraph::new(7, [(4, 2), (6, 2), (6, 1), (2, 3), (3, 5), (1, 5), (1, 7), (7, 5)])
        .expect("acyclic")
}

/// The semi-length pair `(26|5|3, 4|17|∅)`.
pub fn bipartite_example() -> SemiLengthView {
    SemiLengthView::new(
        vec![vec![2, 6], vec![5], vec![3]],
        vec![vec![4], vec![1, 7], vec![]],
    )
    .expect("valid pair")
}

/// Decorated bipartite graph on nine vertices, with or without the edge 3→4.
pub fn expander_example(with_extra_edge: bool) -> Result<DecoratedGraph> {
    let mut edges = vec![(5, 2), (5, 1), (3, 2), (3, 9), (3, 1), (8, 1), (8, 4), (8, 7), (8, 6)];
    if with_extra_edge {
        edges.push((3, 4));
    }
    DecoratedGraph::new(Digraph::new(9, edges)?, BTreeMap::from([(5, 1), (3, 2), (8, 3)]))
}

fn mp_example() -> Result<String> {
    let i = "15|346|2".parse()?;
    let set: BTreeSet<String> = mp_set(&i).iter().map(ToString::to_string).collect();
    Ok(set.into_iter().collect::<Vec<_>>().join(" "))
}

fn single_edge_example() -> Result<String> {
    let g = Digraph::new(3, [(3, 1)])?;
    let f = convert(&gamma_nc::<Rational>(&g), Basis::F)?;
    let mut terms: Vec<(String, Rational)> =
        f.dstar_terms().into_iter().map(|(p, c)| (p.to_string(), c)).collect();
    terms.sort();
    let mut out = String::new();
    for (idx, (p, c)) in terms.into_iter().enumerate() {
        let negative = c < Rational::from_integer(0.into());
        let magnitude = if negative { -c } else { c };
        let sign = match (idx, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let scale = if magnitude == Rational::from_integer(1.into()) {
            String::new()
        } else {
            magnitude.to_string()
        };
        out.push_str(&format!("{sign}{scale}F_{p}"));
    }
    Ok(out)
}

fn cie_example() -> Result<String> {
    let g = seven_vertex_graph();
    let c = UndirectedCycle::from_vertices(&g, vec![6, 2, 3, 5, 1])?;
    let v = cie::<Rational>(&g, &c)?;
    let plus: Vec<String> = c.plus_edges().iter().map(|(u, v)| format!("{u}{v}")).collect();
    Ok(format!("C+ = {{{}}}, {} terms", plus.join(","), v.len()))
}

fn n_expansion_example() -> Result<String> {
    let b = graph_bij(&bipartite_example());
    let sets = reversal_sets(&b)?;
    let cyclic = sets.iter().filter(|(_, d)| *d == Decomposition::Cyclic).count();
    let n = n_expansion::<Rational>(&b)?;
    let unit = n.terms().values().all(|c| *c == Rational::from_integer(1.into()));
    Ok(format!("{} subsets, {cyclic} cyclic, {} terms, unit = {unit}", sets.len(), n.len()))
}

fn expander_verdicts() -> Result<String> {
    let without = expander_example(false)?;
    let with = expander_example(true)?;
    Ok(format!(
        "type {}, without 3-4: {}, with 3-4: {}",
        without.type_partition(),
        without.is_expander(),
        with.is_expander()
    ))
}

/// Runs every example in a fixed order.
pub fn run_all() -> Vec<Check> {
    vec![
        check("packing of 275525", "15|346|2", Ok(delta_of_word(&[2, 7, 5, 5, 2, 5]).to_string())),
        check(
            "composition of 15|346|2",
            "231",
            "15|346|2".parse().map(|i| phi_c(&i).to_string()),
        ),
        check(
            "MP(15|346|2)",
            "153462 1536*42 154*362 1546*32 156*342 156*4*32 \
             5*13462 5*136*42 5*14*362 5*146*32 5*16*342 5*16*4*32",
            mp_example(),
        ),
        check(
            "F-expansion of 3→1",
            "F_231 + F_3*21 + F_312 + F_32*1 - F_321",
            single_edge_example(),
        ),
        check("CIE of (6,2,3,5,1)", "C+ = {23,35,62}, 8 terms", cie_example()),
        check(
            "N-expansion of B(26|5|3, 4|17|)",
            "16 subsets, 3 cyclic, 13 terms, unit = true",
            n_expansion_example(),
        ),
        check(
            "expander verdicts",
            "type (3,2,1), without 3-4: false, with 3-4: true",
            expander_verdicts(),
        ),
    ]
}
