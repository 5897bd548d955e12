//! Hasse diagrams of the weak order, the avoider lattice and the sash
//! lattice, exported as DOT digraphs.

use std::fmt::Write;

use crate::congruence::{enumerate_avoiders, CongruenceSystem};
use crate::error::Result;
use crate::perm::{all_permutations, leq_unchecked, weak_covers_up};
use crate::sash::{enumerate_sashes, sash_covers_up};

/// Nodes and cover edges, labelled by canonical text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n", self.name);
        for n in &self.nodes {
            writeln!(out, "  \"{n}\";").expect("write to string");
        }
        for (a, b) in &self.edges {
            writeln!(out, "  \"{a}\" -> \"{b}\";").expect("write to string");
        }
        out.push_str("}\n");
        out
    }
}

pub fn weak_hasse(n: usize) -> HasseDiagram {
    let perms = all_permutations(n);
    let edges = perms
        .iter()
        .flat_map(|x| weak_covers_up(x).into_iter().map(move |y| (x.to_string(), y.to_string())))
        .collect();
    HasseDiagram {
        name: "weak".into(),
        nodes: perms.iter().map(ToString::to_string).collect(),
        edges,
    }
}

/// Covers of the weak order restricted to the avoiders.
pub fn avoider_hasse(n: usize, u: &CongruenceSystem) -> HasseDiagram {
    let av = enumerate_avoiders(n, u);
    let mut edges = Vec::new();
    for x in &av {
        let above: Vec<_> = av.iter().filter(|y| *y != x && leq_unchecked(x, y)).collect();
        for y in &above {
            let covered = !above.iter().any(|z| z != y && leq_unchecked(z, y));
            if covered {
                edges.push((x.to_string(), y.to_string()));
            }
        }
    }
    HasseDiagram {
        name: "avoiders".into(),
        nodes: av.iter().map(ToString::to_string).collect(),
        edges,
    }
}

/// The sash lattice on sashes of cell length `len`.
pub fn sash_hasse(len: usize) -> Result<HasseDiagram> {
    let sashes = enumerate_sashes(len as i64)?;
    let mut edges = Vec::new();
    for a in &sashes {
        for b in sash_covers_up(a)? {
            edges.push((a.to_string(), b.to_string()));
        }
    }
    Ok(HasseDiagram {
        name: "sashes".into(),
        nodes: sashes.iter().map(ToString::to_string).collect(),
        edges,
    })
}
