use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::chromatic::{x0_zpoly, x_sym};
use crate::enumerate::{
    free_tree_canonical, free_trees, graph_canonical, rooted_graph_canonical, small_graphs,
    small_rooted_graphs,
};
use crate::error::{Error, Result};
use crate::graph::RootedGraph;
use crate::special::{f_specialize, Which};
use crate::sym::{Basis, ZPoly};

/// Which invariant a collision search compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CollisionKind {
    /// `f_T = X_T(q, q, 1, 1)` over free trees.
    FUnrooted,
    /// `X_G` over connected graphs.
    XUnrooted,
    /// `X_0(G_*)` over rooted graphs.
    X0Rooted,
}

impl CollisionKind {
    pub fn name(self) -> &'static str {
        match self {
            CollisionKind::FUnrooted => "f-unrooted",
            CollisionKind::XUnrooted => "X-unrooted",
            CollisionKind::X0Rooted => "X0-rooted",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [
            CollisionKind::FUnrooted,
            CollisionKind::XUnrooted,
            CollisionKind::X0Rooted,
        ]
        .into_iter()
        .find(|k| k.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| Error::Unknown {
            kind: "collision kind",
            name: s.to_string(),
        })
    }
}

/// Two non-isomorphic instances sharing an invariant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Collision {
    pub first: String,
    pub second: String,
    /// The shared invariant in its JSON form.
    pub invariant: Value,
    pub display: String,
}

/// An instance with its invariant, a canonical form and its text line.
struct Entry<T, C> {
    value: T,
    canon: C,
    line: String,
}

/// Groups by the canonical JSON of the invariant, then re-compares
/// candidates exactly and drops isomorphic pairs.
fn collide<T: PartialEq, C: PartialEq>(
    entries: Vec<Entry<T, C>>,
    json: impl Fn(&T) -> Value,
    display: impl Fn(&T) -> String,
) -> Vec<Collision> {
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        groups
            .entry(json(&e.value).to_string())
            .or_default()
            .push(i);
    }
    let mut out = Vec::new();
    for idx in groups.values() {
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let (x, y) = (&entries[i], &entries[j]);
                if x.value == y.value && x.canon != y.canon {
                    out.push(Collision {
                        first: x.line.clone(),
                        second: y.line.clone(),
                        invariant: json(&x.value),
                        display: display(&x.value),
                    });
                }
            }
        }
    }
    out
}

fn mtilde(z: ZPoly) -> Result<ZPoly> {
    z.convert(Basis::AugmentedMonomial)
}

/// Exhaustive collision search among all instances of size `n`.
pub fn search_collision(kind: CollisionKind, n: usize) -> Result<Vec<Collision>> {
    match kind {
        CollisionKind::FUnrooted => {
            let mut entries = Vec::new();
            for t in free_trees(n)? {
                entries.push(Entry {
                    value: f_specialize(&RootedGraph::new(t.clone(), 0)?, Which::FG)?,
                    canon: free_tree_canonical(&t)?,
                    line: t.to_line(),
                });
            }
            Ok(collide(entries, |f| f.to_json("q"), |f| f.display("q")))
        }
        CollisionKind::XUnrooted => {
            let mut entries = Vec::new();
            for g in small_graphs(n, true)? {
                entries.push(Entry {
                    value: mtilde(ZPoly::from_sym(0, x_sym(&g)?))?,
                    canon: graph_canonical(&g)?,
                    line: g.to_line(),
                });
            }
            Ok(collide(entries, ZPoly::to_json, ToString::to_string))
        }
        CollisionKind::X0Rooted => {
            let mut entries = Vec::new();
            for g in small_rooted_graphs(n, false)? {
                entries.push(Entry {
                    value: mtilde(x0_zpoly(&g)?)?,
                    canon: rooted_graph_canonical(&g)?,
                    line: g.to_line(),
                });
            }
            Ok(collide(entries, ZPoly::to_json, ToString::to_string))
        }
    }
}
