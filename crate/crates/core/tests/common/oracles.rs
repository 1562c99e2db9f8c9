//! Slow, independent reference computations used only to check the
//! library.

use fullerene_core::facetgraph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    if m == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[m - 1][m - 1]
}

/// `det(xI - A)` low-to-high, from determinants at `x = 0..=m` and
/// Lagrange interpolation over the rationals.
pub fn det_char_poly(g: &Graph) -> Vec<BigInt> {
    let m = g.order();
    let points: Vec<(BigInt, BigInt)> = (0..=m)
        .map(|t| {
            let t = BigInt::from(t);
            let rows = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let a = if g.are_adjacent(i, j) { BigInt::one() } else { BigInt::zero() };
                            if i == j {
                                &t - a
                            } else {
                                -a
                            }
                        })
                        .collect()
                })
                .collect();
            (t, bareiss_det(rows))
        })
        .collect();
    let mut coeffs = vec![BigRational::zero(); m + 1];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis polynomial prod_{j != i} (x - xj) / (xi - xj).
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(xj.clone());
            }
            basis = next;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (d, c) in basis.into_iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient {c} is not an integer");
            c.to_integer()
        })
        .collect()
}

/// Closed walks of length `k`, counted one step at a time.
pub fn closed_walks(g: &Graph, k: usize) -> u64 {
    fn walk(g: &Graph, start: usize, at: usize, left: usize) -> u64 {
        if left == 0 {
            return u64::from(at == start);
        }
        g.neighbors(at).iter().map(|&w| walk(g, start, w, left - 1)).sum()
    }
    (0..g.order()).map(|s| walk(g, s, s, k)).sum()
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Some `k`-subset of vertices can be ordered into a closed cycle.
pub fn brute_simple_cycle(g: &Graph, k: usize) -> bool {
    subsets(g.order(), k).into_iter().any(|s| {
        permutations(&s[1..]).into_iter().any(|rest| {
            let mut cyc = vec![s[0]];
            cyc.extend(rest);
            (0..k).all(|i| g.are_adjacent(cyc[i], cyc[(i + 1) % k]))
        })
    })
}

/// Some `k`-subset induces a connected 2-regular graph.
pub fn brute_chordless_cycle(g: &Graph, k: usize) -> bool {
    subsets(g.order(), k).into_iter().any(|s| {
        let deg_two = s
            .iter()
            .all(|&u| s.iter().filter(|&&v| g.are_adjacent(u, v)).count() == 2);
        if !deg_two {
            return false;
        }
        // Walk the induced cycle from s[0] and check it covers the subset.
        let (mut prev, mut cur, mut len) = (usize::MAX, s[0], 0);
        loop {
            let next = *s
                .iter()
                .find(|&&v| v != prev && g.are_adjacent(cur, v))
                .unwrap();
            prev = cur;
            cur = next;
            len += 1;
            if cur == s[0] {
                break;
            }
        }
        len == k
    })
}

/// petgraph's VF2 isomorphism.
pub fn petgraph_isomorphic(a: &Graph, b: &Graph) -> bool {
    let to_pg = |g: &Graph| {
        let mut pg = petgraph::graph::UnGraph::<(), ()>::new_undirected();
        let nodes: Vec<_> = (0..g.order()).map(|_| pg.add_node(())).collect();
        for (u, v) in g.edges() {
            pg.add_edge(nodes[u], nodes[v], ());
        }
        pg
    };
    petgraph::algo::is_isomorphic(&to_pg(a), &to_pg(b))
}
