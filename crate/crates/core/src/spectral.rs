//! Spectral analysis of square matrices over a clodum.
//!
//! A square matrix A is viewed as a directed weighted graph with an arc
//! (i,j) for every entry a_ij > ⊥. The principal eigenvalue λ(A) is the
//! maximum cycle mean: the ⋁ over elementary cycles σ of the ⋆-root
//! w(σ)^{⋆(1/ℓ(σ))}. Only elementary cycles of length ≤ n matter. The
//! metric matrix Γ(A) = A ∨ A^(2) ∨ … ∨ A^(n) collects heaviest-path
//! weights and converges exactly when λ(A) ≤ e; its columns at critical
//! nodes provide eigenvectors. The dual eigenvalue is the minimum cycle
//! mean taken with ⋆′ weights and ⋆′-roots.
//!
//! λ is computed by DFS enumeration of elementary cycles (each cycle
//! visited once, rooted at its minimal node). For max-plus matrices larger
//! than [`ENUMERATION_LIMIT`] Karp's dynamic program takes over, since
//! there ⋆-means reduce to arithmetic means.

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// Largest dimension handled by exhaustive cycle enumeration.
pub const ENUMERATION_LIMIT: usize = 15;

/// Arc list of the ⊥-thresholded weighted graph of a square matrix.
#[derive(Debug, Clone)]
pub struct PrecedenceGraph {
    n: usize,
    /// adjacency: for each node, (successor, weight) with weight > ⊥
    succ: Vec<Vec<(usize, Scalar)>>,
}

impl PrecedenceGraph {
    pub fn from_matrix(a: &Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut succ = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let w = a.get(i, j);
                if !w.is_bottom() {
                    succ[i].push((j, w));
                }
            }
        }
        Ok(PrecedenceGraph { n, succ })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, Scalar)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, out)| out.iter().map(move |&(j, w)| (i, j, w)))
    }

    /// Strong connectivity via forward and reverse reachability from node 0.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let fwd = self.reach(0, false);
        let bwd = self.reach(0, true);
        fwd.iter().all(|&r| r) && bwd.iter().all(|&r| r)
    }

    fn reach(&self, start: usize, reversed: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let pred: Vec<Vec<usize>> = if reversed {
            let mut p = vec![Vec::new(); self.n];
            for (i, j, _) in self.arcs() {
                p[j].push(i);
            }
            p
        } else {
            Vec::new()
        };
        while let Some(v) = stack.pop() {
            let next: Vec<usize> = if reversed {
                pred[v].clone()
            } else {
                self.succ[v].iter().map(|&(j, _)| j).collect()
            };
            for u in next {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Visit every elementary cycle exactly once (canonical rotation: the
    /// minimal node first), in deterministic order.
    pub fn for_each_elementary_cycle(&self, mut visit: impl FnMut(&[usize], &[Scalar])) {
        let mut path: Vec<usize> = Vec::new();
        let mut weights: Vec<Scalar> = Vec::new();
        let mut on_path = vec![false; self.n];
        for root in 0..self.n {
            path.push(root);
            on_path[root] = true;
            self.dfs(root, root, &mut path, &mut weights, &mut on_path, &mut visit);
            on_path[root] = false;
            path.pop();
        }
    }

    fn dfs(
        &self,
        root: usize,
        v: usize,
        path: &mut Vec<usize>,
        weights: &mut Vec<Scalar>,
        on_path: &mut [bool],
        visit: &mut impl FnMut(&[usize], &[Scalar]),
    ) {
        for &(u, w) in &self.succ[v] {
            if u == root {
                weights.push(w);
                visit(path, weights);
                weights.pop();
            } else if u > root && !on_path[u] && path.len() < self.n {
                path.push(u);
                weights.push(w);
                on_path[u] = true;
                self.dfs(root, u, path, weights, on_path, visit);
                on_path[u] = false;
                weights.pop();
                path.pop();
            }
        }
    }

    /// Strongly connected components (Kosaraju), as lists of node ids.
    fn sccs(&self) -> Vec<Vec<usize>> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if !seen[s] {
                // iterative post-order
                let mut stack = vec![(s, 0usize)];
                seen[s] = true;
                while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
                    if *idx < self.succ[v].len() {
                        let (u, _) = self.succ[v][*idx];
                        *idx += 1;
                        if !seen[u] {
                            seen[u] = true;
                            stack.push((u, 0));
                        }
                    } else {
                        order.push(v);
                        stack.pop();
                    }
                }
            }
        }
        let mut pred = vec![Vec::new(); self.n];
        for (i, j, _) in self.arcs() {
            pred[j].push(i);
        }
        let mut comp = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for &s in order.iter().rev() {
            if comp[s] == usize::MAX {
                let id = comps.len();
                let mut members = vec![s];
                comp[s] = id;
                let mut stack = vec![s];
                while let Some(v) = stack.pop() {
                    for &u in &pred[v] {
                        if comp[u] == usize::MAX {
                            comp[u] = id;
                            members.push(u);
                            stack.push(u);
                        }
                    }
                }
                members.sort_unstable();
                comps.push(members);
            }
        }
        comps
    }
}

/// Mean of a cycle: the ℓ-fold ⋆-root of its ⋆-weight.
pub fn cycle_mean(c: Clodum, weights: &[Scalar]) -> Scalar {
    let w = weights.iter().fold(c.unit(), |acc, &x| c.mul(acc, x));
    c.kth_root(w, weights.len() as u32)
}

fn dual_cycle_mean_of(c: Clodum, weights: &[Scalar]) -> Scalar {
    let w = weights.iter().fold(c.dual_unit(), |acc, &x| c.dual_mul(acc, x));
    c.dual_kth_root(w, weights.len() as u32)
}

/// Maximum cycle mean λ(A) with one critical cycle (lexicographically
/// smallest canonical node sequence among the cycles achieving λ).
/// Returns (⊥, None) for an acyclic graph.
pub fn cycle_mean_eigenvalue(a: &Matrix) -> Result<(Scalar, Option<Vec<usize>>)> {
    let g = PrecedenceGraph::from_matrix(a)?;
    if g.node_count() > ENUMERATION_LIMIT {
        if a.clodum() == Clodum::MaxPlus {
            return karp_max_cycle_mean(a);
        }
        return Err(Error::Unsupported(format!(
            "cycle enumeration handles up to {ENUMERATION_LIMIT} nodes for {}",
            a.clodum()
        )));
    }
    let c = a.clodum();
    let mut best: Option<(Scalar, Vec<usize>)> = None;
    g.for_each_elementary_cycle(|nodes, weights| {
        let mean = cycle_mean(c, weights);
        let better = match &best {
            None => true,
            Some((b, cyc)) => match mean.total_cmp(b) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Equal => nodes < cyc.as_slice(),
                std::cmp::Ordering::Less => false,
            },
        };
        if better {
            best = Some((mean, nodes.to_vec()));
        }
    });
    Ok(match best {
        Some((lambda, cyc)) => (lambda, Some(cyc)),
        None => (Scalar::Bottom, None),
    })
}

/// Minimum cycle mean under ⋆′ weights and ⋆′-roots, over the same
/// ⊥-thresholded graph. Returns (⊤, None) for an acyclic graph.
pub fn dual_cycle_mean(a: &Matrix) -> Result<(Scalar, Option<Vec<usize>>)> {
    let g = PrecedenceGraph::from_matrix(a)?;
    if g.node_count() > ENUMERATION_LIMIT {
        if a.clodum() == Clodum::MaxPlus && a.entries().all(|s| !s.is_top()) {
            return Ok((karp_min_cycle_mean_max_plus(a, &g)?, None));
        }
        return Err(Error::Unsupported(format!(
            "dual cycle enumeration handles up to {ENUMERATION_LIMIT} nodes for {}",
            a.clodum()
        )));
    }
    let c = a.clodum();
    let mut best: Option<(Scalar, Vec<usize>)> = None;
    g.for_each_elementary_cycle(|nodes, weights| {
        let mean = dual_cycle_mean_of(c, weights);
        let better = match &best {
            None => true,
            Some((b, cyc)) => match mean.total_cmp(b) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => nodes < cyc.as_slice(),
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            best = Some((mean, nodes.to_vec()));
        }
    });
    Ok(match best {
        Some((lambda, cyc)) => (lambda, Some(cyc)),
        None => (Scalar::Top, None),
    })
}

/// Karp's maximum mean cycle algorithm. Max-plus only: the ⋆-mean of a
/// cycle is the arithmetic mean of its arc weights. Runs per strongly
/// connected component; the critical cycle is extracted from the parent
/// chain of the optimal length-n walk.
pub fn karp_max_cycle_mean(a: &Matrix) -> Result<(Scalar, Option<Vec<usize>>)> {
    if a.clodum() != Clodum::MaxPlus {
        return Err(Error::Unsupported(format!(
            "Karp cycle mean applies to max-plus only, not {}",
            a.clodum()
        )));
    }
    let g = PrecedenceGraph::from_matrix(a)?;
    let c = a.clodum();
    let mut best: Option<(f64, Vec<usize>)> = None;

    for comp in g.sccs() {
        let n = comp.len();
        // local index within the component
        let mut local = vec![usize::MAX; g.node_count()];
        for (li, &v) in comp.iter().enumerate() {
            local[v] = li;
        }
        let mut arcs: Vec<(usize, usize, f64)> = Vec::new();
        for &v in &comp {
            for &(u, w) in &g.succ[v] {
                if local[u] != usize::MAX {
                    arcs.push((local[v], local[u], c.to_f64(w)));
                }
            }
        }
        if arcs.is_empty() {
            continue;
        }
        // F[k][v] = max weight of a k-arc walk from node 0 (component-local)
        let neg = f64::NEG_INFINITY;
        let mut f = vec![vec![neg; n]; n + 1];
        let mut parent = vec![vec![usize::MAX; n]; n + 1];
        f[0][0] = 0.0;
        for k in 1..=n {
            for &(v, u, w) in &arcs {
                if f[k - 1][v] > neg {
                    let cand = f[k - 1][v] + w;
                    if cand > f[k][u] {
                        f[k][u] = cand;
                        parent[k][u] = v;
                    }
                }
            }
        }
        // λ = max_v min_k (F_n(v) − F_k(v)) / (n − k)
        let mut comp_best: Option<(f64, usize)> = None;
        for v in 0..n {
            if f[n][v] <= neg {
                continue;
            }
            let mut worst = f64::INFINITY;
            for k in 0..n {
                if f[k][v] > neg {
                    worst = worst.min((f[n][v] - f[k][v]) / (n - k) as f64);
                }
            }
            if worst < f64::INFINITY
                && comp_best.map_or(true, |(b, _)| worst > b)
            {
                comp_best = Some((worst, v));
            }
        }
        let Some((lambda_c, v_star)) = comp_best else {
            continue;
        };
        // walk the parent chain of the optimal length-n walk; every segment
        // between repeated nodes is a cycle — pick the one whose mean
        // matches λ best
        let mut walk = vec![v_star];
        let mut k = n;
        let mut v = v_star;
        while k > 0 {
            v = parent[k][v];
            walk.push(v);
            k -= 1;
        }
        walk.reverse(); // walk[0] = source, walk[n] = v_star
        let mut cycle: Option<Vec<usize>> = None;
        let mut cycle_err = f64::INFINITY;
        let mut last_seen = vec![usize::MAX; n];
        for (idx, &node) in walk.iter().enumerate() {
            if last_seen[node] != usize::MAX {
                let seg = &walk[last_seen[node]..idx];
                let mut w = 0.0;
                for t in 0..seg.len() {
                    let from = seg[t];
                    let to = if t + 1 < seg.len() { seg[t + 1] } else { seg[0] };
                    w += c.to_f64(a.get(comp[from], comp[to]));
                }
                let err = (w / seg.len() as f64 - lambda_c).abs();
                if err < cycle_err {
                    cycle_err = err;
                    cycle = Some(seg.iter().map(|&li| comp[li]).collect());
                }
            }
            last_seen[node] = idx;
        }
        if best.as_ref().map_or(true, |(b, _)| lambda_c > *b) {
            let cyc = cycle.map(canonical_rotation).unwrap_or_default();
            best = Some((lambda_c, cyc));
        }
    }

    Ok(match best {
        Some((lambda, cyc)) => (c.scalar(lambda)?, if cyc.is_empty() { None } else { Some(cyc) }),
        None => (Scalar::Bottom, None),
    })
}

/// Karp's dynamic program for the minimum cycle mean. Max-plus with
/// ⊤-free entries only (⋆′-means reduce to arithmetic means there).
fn karp_min_cycle_mean_max_plus(a: &Matrix, g: &PrecedenceGraph) -> Result<Scalar> {
    let c = a.clodum();
    let mut best: Option<f64> = None;
    for comp in g.sccs() {
        let n = comp.len();
        let mut local = vec![usize::MAX; g.node_count()];
        for (li, &v) in comp.iter().enumerate() {
            local[v] = li;
        }
        let mut arcs: Vec<(usize, usize, f64)> = Vec::new();
        for &v in &comp {
            for &(u, w) in &g.succ[v] {
                if local[u] != usize::MAX {
                    arcs.push((local[v], local[u], c.to_f64(w)));
                }
            }
        }
        if arcs.is_empty() {
            continue;
        }
        let inf = f64::INFINITY;
        let mut f = vec![vec![inf; n]; n + 1];
        f[0][0] = 0.0;
        for k in 1..=n {
            for &(v, u, w) in &arcs {
                if f[k - 1][v] < inf {
                    let cand = f[k - 1][v] + w;
                    if cand < f[k][u] {
                        f[k][u] = cand;
                    }
                }
            }
        }
        // λ' = min_v max_k (F_n(v) − F_k(v)) / (n − k)
        let mut comp_best: Option<f64> = None;
        for v in 0..n {
            if f[n][v] >= inf {
                continue;
            }
            let mut worst = f64::NEG_INFINITY;
            for k in 0..n {
                if f[k][v] < inf {
                    worst = worst.max((f[n][v] - f[k][v]) / (n - k) as f64);
                }
            }
            if worst > f64::NEG_INFINITY && comp_best.is_none_or(|b| worst < b) {
                comp_best = Some(worst);
            }
        }
        if let Some(l) = comp_best {
            if best.is_none_or(|b| l < b) {
                best = Some(l);
            }
        }
    }
    match best {
        Some(l) => Ok(c.scalar(l)?),
        None => Ok(Scalar::Top),
    }
}

fn canonical_rotation(cycle: Vec<usize>) -> Vec<usize> {
    if cycle.is_empty() {
        return cycle;
    }
    let (pos, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .expect("non-empty cycle");
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[pos..]);
    out.extend_from_slice(&cycle[..pos]);
    out
}

/// Finite join of powers Γ(A) = A ∨ A^(2) ∨ … ∨ A^(n). Converges (equals
/// the infinite series, with A^(t) ≤ Γ(A) for all t) iff λ(A) ≤ e; when
/// λ(A) > e the partial join is returned with `converged = false`.
pub fn metric_matrix(a: &Matrix, tol: f64) -> Result<(Matrix, bool)> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut power = a.clone();
    let mut gamma = a.clone();
    for _ in 2..=n {
        power = a.max_mul(&power)?;
        gamma = gamma.join(&power)?;
    }
    // cloduma with e = ⊤ always satisfy λ ≤ e
    let converged = if a.clodum().unit().is_top() {
        true
    } else {
        let (lambda, _) = cycle_mean_eigenvalue(a)?;
        lambda.le_tol(a.clodum().unit(), tol)
    };
    Ok((gamma, converged))
}

/// True iff A ⊠ v = λ ⋆ v within tolerance and v is not the ⊥ vector.
pub fn eigen_check(a: &Matrix, v: &Vector, lambda: Scalar, tol: f64) -> Result<bool> {
    let lhs = a.max_mul_vec(v)?;
    let rhs = v.scale(lambda);
    Ok(lhs.approx_eq(&rhs, tol) && v.iter().any(|s| !s.is_bottom()))
}

/// Eigenvector candidates for λ(A): columns of Γ(λ* ⋆ A) at critical-cycle
/// nodes (for clogs with finite λ the matrix is normalized by λ*; for
/// cloda with e = ⊤ the matrix is used as-is). Only columns that pass
/// [`eigen_check`] are returned.
pub fn principal_eigenvectors(a: &Matrix, tol: f64) -> Result<Vec<Vector>> {
    let c = a.clodum();
    let (lambda, critical) = cycle_mean_eigenvalue(a)?;
    let Some(critical) = critical else {
        return Ok(Vec::new());
    };
    let normalized = if c.is_clog() && lambda.is_finite() {
        a.scale(c.conjugate(lambda))
    } else {
        a.clone()
    };
    let (gamma, _) = metric_matrix(&normalized, tol)?;
    let mut out = Vec::new();
    for &node in &critical {
        let v = gamma.column(node);
        if eigen_check(a, &v, lambda, tol)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Summary of the spectral structure of a square matrix.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    pub lambda: Scalar,
    pub critical_cycle: Option<Vec<usize>>,
    pub is_irreducible: bool,
    /// Present only when the power series converged.
    pub metric_matrix: Option<Matrix>,
    pub metric_converged: bool,
    pub dual_lambda: Scalar,
}

pub fn spectral_report(a: &Matrix, tol: f64) -> Result<SpectralReport> {
    let g = PrecedenceGraph::from_matrix(a)?;
    let (lambda, critical_cycle) = cycle_mean_eigenvalue(a)?;
    let (gamma, converged) = metric_matrix(a, tol)?;
    let (dual_lambda, _) = dual_cycle_mean(a)?;
    Ok(SpectralReport {
        lambda,
        critical_cycle,
        is_irreducible: g.is_strongly_connected(),
        metric_matrix: converged.then_some(gamma),
        metric_converged: converged,
        dual_lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clodum::DEFAULT_TOLERANCE as TOL;

    const NEG: f64 = f64::NEG_INFINITY;

    fn mp(rows: &[Vec<f64>]) -> Matrix {
        Matrix::from_rows(Clodum::MaxPlus, rows).unwrap()
    }

    #[test]
    fn diagonal_matrix_cycle_means() {
        let a = mp(&[
            vec![2.0, NEG, NEG],
            vec![NEG, -1.0, NEG],
            vec![NEG, NEG, 0.5],
        ]);
        let (lambda, cyc) = cycle_mean_eigenvalue(&a).unwrap();
        assert_eq!(lambda, Scalar::Finite(2.0));
        assert_eq!(cyc, Some(vec![0]));
        let (dual, _) = dual_cycle_mean(&a).unwrap();
        assert_eq!(dual, Scalar::Finite(-1.0));
    }

    #[test]
    fn two_cycle_graph() {
        let a = mp(&[vec![NEG, 2.0], vec![4.0, NEG]]);
        let (lambda, cyc) = cycle_mean_eigenvalue(&a).unwrap();
        assert_eq!(lambda, Scalar::Finite(3.0));
        assert_eq!(cyc, Some(vec![0, 1]));
        let (dual, _) = dual_cycle_mean(&a).unwrap();
        assert_eq!(dual, Scalar::Finite(3.0));
    }

    #[test]
    fn acyclic_graph_has_bottom_eigenvalue() {
        let a = mp(&[vec![NEG, 1.0], vec![NEG, NEG]]);
        let (lambda, cyc) = cycle_mean_eigenvalue(&a).unwrap();
        assert!(lambda.is_bottom());
        assert!(cyc.is_none());
        let (dual, _) = dual_cycle_mean(&a).unwrap();
        assert!(dual.is_top());
    }

    /// Companion matrix of an order-n recursion: λ = ⋁_k a_k/k.
    #[test]
    fn companion_eigenvalue() {
        let coeffs = [-0.5, -0.2, 0.9, -1.0]; // a_1..a_4
        let n = coeffs.len();
        let mut a = Matrix::bottoms(Clodum::MaxPlus, n, n);
        for i in 0..n - 1 {
            a.set(i, i + 1, Scalar::Finite(0.0));
        }
        for j in 0..n {
            a.set(n - 1, j, Scalar::Finite(coeffs[n - 1 - j]));
        }
        let (lambda, _) = cycle_mean_eigenvalue(&a).unwrap();
        let expect = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c / (k + 1) as f64)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(lambda.approx_eq(Scalar::Finite(expect), TOL));
    }

    #[test]
    fn karp_agrees_with_enumeration() {
        let a = mp(&[
            vec![NEG, 2.0, 1.0, NEG],
            vec![-1.0, NEG, NEG, 3.0],
            vec![NEG, 0.5, NEG, NEG],
            vec![1.5, NEG, -2.0, NEG],
        ]);
        let (le, _) = cycle_mean_eigenvalue(&a).unwrap();
        let (lk, cyc) = karp_max_cycle_mean(&a).unwrap();
        assert!(le.approx_eq(lk, TOL));
        // the extracted cycle achieves λ
        let cyc = cyc.unwrap();
        let mut w = 0.0;
        for t in 0..cyc.len() {
            let to = cyc[(t + 1) % cyc.len()];
            w += Clodum::MaxPlus.to_f64(a.get(cyc[t], to));
        }
        let c = Clodum::MaxPlus;
        assert!(c
            .scalar(w / cyc.len() as f64)
            .unwrap()
            .approx_eq(lk, TOL));
    }

    #[test]
    fn karp_rejects_non_max_plus() {
        let a = Matrix::from_rows(Clodum::MaxMin, &[vec![0.5]]).unwrap();
        assert!(karp_max_cycle_mean(&a).is_err());
    }

    #[test]
    fn fuzzy_markov_metric_matrix() {
        let c = Clodum::MaxMin;
        let a = Matrix::from_rows(
            c,
            &[
                vec![1.0, 0.4, 0.0],
                vec![0.3, 1.0, 0.5],
                vec![0.7, 0.2, 1.0],
            ],
        )
        .unwrap();
        let (gamma, converged) = metric_matrix(&a, TOL).unwrap();
        assert!(converged);
        let expected = Matrix::from_rows(
            c,
            &[
                vec![1.0, 0.4, 0.4],
                vec![0.5, 1.0, 0.5],
                vec![0.7, 0.4, 1.0],
            ],
        )
        .unwrap();
        assert!(gamma.approx_eq(&expected, TOL));
        // A^(2) = A^(3) = Γ(A) here
        assert!(a.power(2).unwrap().approx_eq(&expected, TOL));
        assert!(a.power(3).unwrap().approx_eq(&expected, TOL));
        // λ = 1 (= e = ⊤): the unit diagonal gives self-loops with mean ⊤
        let (lambda, _) = cycle_mean_eigenvalue(&a).unwrap();
        assert!(lambda.is_top());
        // fixed point from the metric matrix
        let v = Vector::from_f64s(c, &[1.0, 0.5, 0.7]).unwrap();
        assert!(eigen_check(&a, &v, c.unit(), TOL).unwrap());
    }

    #[test]
    fn metric_of_identity_is_identity() {
        let i = Matrix::identity(Clodum::MaxPlus, 3);
        let (gamma, converged) = metric_matrix(&i, TOL).unwrap();
        assert!(converged);
        assert!(gamma.approx_eq(&i, TOL));
    }

    #[test]
    fn eigenvector_from_scaled_metric() {
        let a = mp(&[vec![NEG, 2.0], vec![4.0, NEG]]);
        let vs = principal_eigenvectors(&a, TOL).unwrap();
        assert!(!vs.is_empty());
        let (lambda, _) = cycle_mean_eigenvalue(&a).unwrap();
        for v in vs {
            assert!(eigen_check(&a, &v, lambda, TOL).unwrap());
        }
    }

    #[test]
    fn eigen_check_rejects_bottom_vector() {
        let a = mp(&[vec![0.0]]);
        let bottom = Vector::bottoms(Clodum::MaxPlus, 1);
        assert!(!eigen_check(&a, &bottom, Scalar::Finite(0.0), TOL).unwrap());
    }

    #[test]
    fn irreducibility_detection() {
        let a = mp(&[vec![NEG, 1.0], vec![1.0, NEG]]);
        assert!(spectral_report(&a, TOL).unwrap().is_irreducible);
        let b = mp(&[vec![NEG, 1.0], vec![NEG, NEG]]);
        assert!(!spectral_report(&b, TOL).unwrap().is_irreducible);
    }

    /// Independent brute-force enumeration of elementary cycles (all node
    /// subsequences) for the dual mean on a small max-min instance.
    #[test]
    fn dual_cycle_mean_brute_force_oracle() {
        let c = Clodum::MaxMin;
        let a = Matrix::from_rows(
            c,
            &[
                vec![0.2, 0.9, 0.0],
                vec![0.5, 0.0, 0.7],
                vec![0.4, 0.1, 0.6],
            ],
        )
        .unwrap();
        let (dual, _) = dual_cycle_mean(&a).unwrap();
        // brute force: every sequence of distinct nodes up to length 3
        let n = 3usize;
        let mut best = Scalar::Top;
        let mut seqs: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut all = seqs.clone();
        for _ in 1..n {
            let mut next = Vec::new();
            for s in &seqs {
                for v in 0..n {
                    if !s.contains(&v) {
                        let mut t = s.clone();
                        t.push(v);
                        next.push(t);
                    }
                }
            }
            all.extend(next.iter().cloned());
            seqs = next;
        }
        for seq in all {
            // close the cycle if every arc exists
            let mut ok = true;
            let mut w = c.dual_unit();
            for t in 0..seq.len() {
                let from = seq[t];
                let to = seq[(t + 1) % seq.len()];
                let entry = a.get(from, to);
                if entry.is_bottom() {
                    ok = false;
                    break;
                }
                w = c.dual_mul(w, entry);
            }
            if ok {
                best = best.meet(c.dual_kth_root(w, seq.len() as u32));
            }
        }
        assert!(dual.approx_eq(best, TOL));
    }

    /// Dimensions past the enumeration limit go through the Karp path.
    #[test]
    fn large_max_plus_uses_karp() {
        let c = Clodum::MaxPlus;
        let n = 20usize;
        let mut a = Matrix::bottoms(c, n, n);
        // a single n-cycle with known mean plus one heavy self-loop
        for i in 0..n {
            a.set(i, (i + 1) % n, Scalar::Finite(1.0));
        }
        a.set(7, 7, Scalar::Finite(2.5));
        let (lambda, cyc) = cycle_mean_eigenvalue(&a).unwrap();
        assert!(lambda.approx_eq(Scalar::Finite(2.5), TOL));
        assert_eq!(cyc, Some(vec![7]));
        // the dual goes through the min-Karp path: min(1.0, 2.5) = 1.0
        let (dual, _) = dual_cycle_mean(&a).unwrap();
        assert!(dual.approx_eq(Scalar::Finite(1.0), TOL));
        // non-max-plus instances of that size are rejected, not enumerated
        let big = Matrix::filled(Clodum::MaxMin, n, n, Scalar::Finite(0.5));
        assert!(cycle_mean_eigenvalue(&big).is_err());
        assert!(dual_cycle_mean(&big).is_err());
    }

    /// Karp-min agrees with dual enumeration at enumerable sizes.
    #[test]
    fn karp_min_matches_enumeration() {
        let seeds: &[&[Vec<f64>]] = &[
            &[
                vec![NEG, 2.0, 1.0],
                vec![-1.0, NEG, 3.0],
                vec![0.5, -2.0, NEG],
            ],
            &[
                vec![4.0, NEG, 0.0],
                vec![1.0, -3.0, NEG],
                vec![NEG, 2.5, -1.5],
            ],
        ];
        for rows in seeds {
            let a = mp(rows);
            let g = PrecedenceGraph::from_matrix(&a).unwrap();
            let (dual, _) = dual_cycle_mean(&a).unwrap();
            let karp = karp_min_cycle_mean_max_plus(&a, &g).unwrap();
            assert!(dual.approx_eq(karp, TOL), "{dual:?} vs {karp:?}");
        }
    }

    /// Strong connectivity with λ ≤ e keeps every metric entry above ⊥.
    #[test]
    fn irreducible_metric_has_no_bottom() {
        let a = mp(&[
            vec![NEG, -1.0, NEG],
            vec![NEG, NEG, -0.5],
            vec![-0.25, NEG, NEG],
        ]);
        let g = PrecedenceGraph::from_matrix(&a).unwrap();
        assert!(g.is_strongly_connected());
        let (gamma, converged) = metric_matrix(&a, TOL).unwrap();
        assert!(converged);
        assert!(gamma.entries().all(|s| !s.is_bottom()));
    }

    #[test]
    fn diagonal_eigenvector_is_unit_impulse() {
        let a = mp(&[vec![2.0, NEG], vec![NEG, -1.0]]);
        let (lambda, _) = cycle_mean_eigenvalue(&a).unwrap();
        let v = Vector::impulse(Clodum::MaxPlus, 2, 0);
        assert!(eigen_check(&a, &v, lambda, TOL).unwrap());
    }

    #[test]
    fn scaling_covariance_max_plus() {
        let a = mp(&[vec![NEG, 2.0, 0.0], vec![1.0, NEG, -1.0], vec![0.5, 3.0, NEG]]);
        let (lambda, _) = cycle_mean_eigenvalue(&a).unwrap();
        let c = Scalar::Finite(1.75);
        let scaled = a.scale(c);
        let (lambda_scaled, _) = cycle_mean_eigenvalue(&scaled).unwrap();
        assert!(lambda_scaled.approx_eq(Clodum::MaxPlus.mul(c, lambda), TOL));
    }
}
