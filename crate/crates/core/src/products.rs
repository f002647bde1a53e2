//! Cartesian and rooted product graphs over `base^fiber` vertex names.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::letter::Letter;

/// `G □ H`: vertices `u^v`; `u^a ~ u^b` for `ab ∈ E(H)` and `x^v ~ y^v` for
/// `xy ∈ E(G)`. Vertices are declared base-major.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut product = Graph::new();
    for u in g.vertices() {
        for v in h.vertices() {
            product.add_vertex(Letter::pair(u, v));
        }
    }
    for u in g.vertices() {
        for (a, b) in h.edges() {
            product.add_edge(Letter::pair(u, &a), Letter::pair(u, &b))?;
        }
    }
    for v in h.vertices() {
        for (x, y) in g.edges() {
            product.add_edge(Letter::pair(&x, v), Letter::pair(&y, v))?;
        }
    }
    Ok(product)
}

/// `G ∘ H`: one copy of `H` per vertex `u` of `G`, named `u^v`, with the
/// copy's root `u^root` standing in for `u` on the edges of `G`.
pub fn rooted_product(g: &Graph, h: &Graph, root: &Letter) -> Result<Graph> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !h.contains(root) {
        return Err(Error::UnknownVertex(root.clone()));
    }
    let mut product = Graph::new();
    for u in g.vertices() {
        for v in h.vertices() {
            product.add_vertex(Letter::pair(u, v));
        }
    }
    for (x, y) in g.edges() {
        product.add_edge(Letter::pair(&x, root), Letter::pair(&y, root))?;
    }
    for u in g.vertices() {
        for (a, b) in h.edges() {
            product.add_edge(Letter::pair(u, &a), Letter::pair(u, &b))?;
        }
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::PairVertex;

    fn l(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn small_graphs() -> Vec<Graph> {
        vec![
            Graph::complete(1).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::path(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::parse("edge a b\nvertex c\n").unwrap(),
        ]
    }

    #[test]
    fn k2_square_k2_is_c4() {
        let k2 = Graph::complete(2).unwrap();
        let p = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((p.order(), p.size()), (4, 4));
        let c4 = Graph::cycle(4).unwrap();
        let relabelled = c4
            .relabel(|v| match v.as_str() {
                "1" => l("1^1"),
                "2" => l("1^2"),
                "3" => l("2^2"),
                _ => l("2^1"),
            })
            .unwrap();
        assert_eq!(p, relabelled);
    }

    #[test]
    fn cartesian_counts_and_degrees() {
        for g in small_graphs() {
            for h in small_graphs() {
                let p = cartesian_product(&g, &h).unwrap();
                assert_eq!(p.order(), g.order() * h.order());
                assert_eq!(p.size(), g.size() * h.order() + h.size() * g.order());
                for u in g.vertices() {
                    for v in h.vertices() {
                        assert_eq!(
                            p.degree(&Letter::pair(u, v)).unwrap(),
                            g.degree(u).unwrap() + h.degree(v).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cartesian_commutes_under_coordinate_swap() {
        for g in small_graphs() {
            for h in small_graphs() {
                let gh = cartesian_product(&g, &h).unwrap();
                let hg = cartesian_product(&h, &g).unwrap();
                let swapped = hg
                    .relabel(|v| PairVertex::from_letter(v).unwrap().transposed().to_letter())
                    .unwrap();
                assert_eq!(gh, swapped);
            }
        }
    }

    #[test]
    fn k1_is_cartesian_identity() {
        let k1 = Graph::complete(1).unwrap();
        for h in small_graphs() {
            let p = cartesian_product(&k1, &h).unwrap();
            let stripped = p
                .relabel(|v| PairVertex::from_letter(v).unwrap().fiber)
                .unwrap();
            assert_eq!(stripped, h);
        }
    }

    #[test]
    fn rooted_k2_k2_is_p4() {
        let k2 = Graph::parse("edge r 1\n").unwrap();
        let p = rooted_product(&Graph::complete(2).unwrap(), &k2, &l("r")).unwrap();
        assert_eq!((p.order(), p.size()), (4, 3));
        assert!(p.has_edge(&l("1^1"), &l("1^r")));
        assert!(p.has_edge(&l("1^r"), &l("2^r")));
        assert!(p.has_edge(&l("2^r"), &l("2^1")));
        assert_eq!(p.diameter().unwrap(), 3);
    }

    #[test]
    fn rooted_counts_and_root_layer() {
        for g in small_graphs() {
            for h in small_graphs() {
                for root in h.vertices() {
                    let p = rooted_product(&g, &h, root).unwrap();
                    assert_eq!(p.order(), g.order() * h.order());
                    assert_eq!(p.size(), g.size() + g.order() * h.size());
                    let roots: Vec<Letter> =
                        g.vertices().iter().map(|u| Letter::pair(u, root)).collect();
                    let layer = p
                        .induced(&roots)
                        .unwrap()
                        .relabel(|v| PairVertex::from_letter(v).unwrap().base)
                        .unwrap();
                    assert_eq!(layer, g);
                }
            }
        }
    }

    #[test]
    fn rooted_with_k1_is_identity() {
        let k1 = Graph::complete(1).unwrap();
        for g in small_graphs() {
            let p = rooted_product(&g, &k1, &l("1")).unwrap();
            let stripped = p
                .relabel(|v| PairVertex::from_letter(v).unwrap().base)
                .unwrap();
            assert_eq!(stripped, g);
        }
    }

    #[test]
    fn errors() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            cartesian_product(&Graph::new(), &k2),
            Err(Error::EmptyGraph)
        );
        assert_eq!(
            rooted_product(&k2, &k2, &l("9")),
            Err(Error::UnknownVertex(l("9")))
        );
    }

    #[test]
    fn nested_products_serialize() {
        let k2 = Graph::complete(2).unwrap();
        let q = cartesian_product(&cartesian_product(&k2, &k2).unwrap(), &k2).unwrap();
        assert_eq!((q.order(), q.size()), (8, 12));
        assert!(q.contains(&l("(1^2)^1")));
        assert_eq!(Graph::parse(&q.to_text()).unwrap(), q);
    }
}
