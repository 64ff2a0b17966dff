//! Composition trees of constant real-linear maps, position multipliers
//! and Fourier multipliers, applied by FFT sandwiches.
//!
//! Adjacent k-space factors are fused when a tree is built. A fused factor
//! is a real-linear symbol `ψ̂(k) ↦ L(k)ψ̂(k) + A(k)·conj(ψ̂(−k))`, which is
//! closed under composition and sums, so products of Fourier multipliers and
//! constant maps cost one pointwise pass however long they are.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rayon::prelude::*;

use crate::grid::{Grid, GridSpinor};
use crate::num::{NumOp, C64, M4};

#[derive(Debug)]
struct SymbolTable {
    grid: Arc<Grid>,
    l: Vec<M4>,
    a: Option<Vec<M4>>,
}

#[derive(Clone, Debug)]
enum Node {
    Const(NumOp),
    Position(Arc<Vec<f64>>),
    Multiplier(Arc<Grid>, Arc<Vec<f64>>),
    Symbol(Arc<SymbolTable>),
    /// Applied right to left.
    Compose(Vec<GridOperator>),
    Sum(Vec<GridOperator>),
}

/// A real-linear operator on grid spinors. Tables are sampled once at
/// construction, so an operator belongs to the grid it was built on.
#[derive(Clone, Debug)]
pub struct GridOperator {
    node: Node,
}

#[derive(Clone)]
struct Field {
    fourier: bool,
    data: Vec<C64>,
}

fn op(node: Node) -> GridOperator {
    GridOperator { node }
}

impl GridOperator {
    pub fn constant(op: NumOp) -> Self {
        GridOperator { node: Node::Const(op) }
    }

    pub fn scalar(c: C64) -> Self {
        Self::constant(NumOp::scalar(c))
    }

    pub fn identity() -> Self {
        Self::constant(NumOp::identity())
    }

    pub fn conjugation() -> Self {
        Self::constant(NumOp::conjugation())
    }

    /// Multiplication by a real function of x.
    pub fn position(grid: &Grid, f: impl Fn([f64; 3]) -> f64) -> Self {
        op(Node::Position(Arc::new(grid.sample_position(f))))
    }

    /// Fourier multiplier with a real scalar symbol.
    pub fn multiplier(grid: &Arc<Grid>, f: impl Fn([f64; 3]) -> f64) -> Self {
        op(Node::Multiplier(grid.clone(), Arc::new(grid.sample_momentum(f))))
    }

    /// Fourier multiplier with a 4×4 matrix symbol.
    pub fn symbol(grid: &Arc<Grid>, f: impl Fn([f64; 3]) -> M4) -> Self {
        let l = grid.sample_momentum(f);
        op(Node::Symbol(Arc::new(SymbolTable { grid: grid.clone(), l, a: None })))
    }

    /// True when the operator was fused into a single k-space symbol.
    pub fn is_fused_symbol(&self) -> bool {
        matches!(self.node, Node::Symbol(_) | Node::Multiplier(..))
    }

    pub fn compose(&self, other: &GridOperator) -> GridOperator {
        let mut parts: Vec<GridOperator> = Vec::new();
        for o in [self, other] {
            let items = match &o.node {
                Node::Compose(v) => v.clone(),
                _ => vec![o.clone()],
            };
            for mut it in items {
                while let Some(f) = parts.last().and_then(|last| fuse_pair(last, &it)) {
                    parts.pop();
                    it = f;
                }
                parts.push(it);
            }
        }
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        op(Node::Compose(parts))
    }

    pub fn sum(terms: Vec<GridOperator>) -> GridOperator {
        let mut flat = Vec::with_capacity(terms.len());
        for t in terms {
            match t.node {
                Node::Sum(v) => flat.extend(v),
                node => flat.push(op(node)),
            }
        }
        let mut consts: Option<NumOp> = None;
        let mut positions: Option<Vec<f64>> = None;
        let mut kspace: Option<GridOperator> = None;
        let mut rest = Vec::new();
        for t in flat {
            match &t.node {
                Node::Const(c) => consts = Some(consts.map_or_else(|| c.clone(), |acc| acc.add(c))),
                Node::Position(p) => match &mut positions {
                    Some(acc) => acc.iter_mut().zip(p.iter()).for_each(|(a, b)| *a += b),
                    None => positions = Some(p.to_vec()),
                },
                Node::Multiplier(..) | Node::Symbol(_) => {
                    kspace = Some(match kspace {
                        None => t,
                        Some(acc) => add_kspace(&acc, &t),
                    })
                }
                _ => rest.push(t),
            }
        }
        let mut parts = Vec::new();
        match (kspace, consts) {
            (Some(k), Some(c)) => parts.push(add_kspace(&k, &GridOperator::constant(c))),
            (Some(k), None) => parts.push(k),
            (None, Some(c)) => parts.push(GridOperator::constant(c)),
            (None, None) => {}
        }
        if let Some(p) = positions {
            parts.push(op(Node::Position(Arc::new(p))));
        }
        parts.extend(rest);
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        op(Node::Sum(parts))
    }

    /// Left multiplication by a complex scalar.
    pub fn scale(&self, c: C64) -> GridOperator {
        Self::scalar(c).compose(self)
    }

    pub fn commutator(&self, other: &GridOperator) -> GridOperator {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &GridOperator) -> GridOperator {
        &(self * other) + &(other * self)
    }

    pub fn apply(&self, psi: &GridSpinor) -> GridSpinor {
        let grid = psi.grid();
        let f = self.apply_field(grid, Field { fourier: false, data: psi.data().to_vec() });
        let data = to_position(grid, f).data;
        GridSpinor::from_data(grid, data).expect("operators preserve the sample count")
    }

    fn apply_field(&self, grid: &Grid, f: Field) -> Field {
        let len = grid.len();
        match &self.node {
            Node::Const(c) => apply_pointwise(grid, f, |_| (c.l, (!c.is_linear()).then_some(c.a))),
            Node::Position(v) => {
                let mut f = to_position(grid, f);
                assert_eq!(v.len(), len, "operator sampled on a different grid");
                for block in f.data.chunks_mut(len) {
                    block.iter_mut().zip(v.iter()).for_each(|(z, s)| *z *= s);
                }
                f
            }
            Node::Multiplier(_, v) => {
                let mut f = to_fourier(grid, f);
                assert_eq!(v.len(), len, "operator sampled on a different grid");
                for block in f.data.chunks_mut(len) {
                    block.iter_mut().zip(v.iter()).for_each(|(z, s)| *z *= s);
                }
                f
            }
            Node::Symbol(t) => {
                assert_eq!(t.l.len(), len, "operator sampled on a different grid");
                let f = to_fourier(grid, f);
                apply_pointwise(grid, f, |p| (t.l[p], t.a.as_ref().map(|a| a[p])))
            }
            Node::Compose(parts) => parts.iter().rev().fold(f, |acc, o| o.apply_field(grid, acc)),
            Node::Sum(terms) => {
                let Some((first, rest)) = terms.split_first() else {
                    return Field { fourier: f.fourier, data: vec![C64::new(0.0, 0.0); f.data.len()] };
                };
                let mut acc = first.apply_field(grid, f.clone());
                for t in rest {
                    let r = t.apply_field(grid, f.clone());
                    let r = if acc.fourier { to_fourier(grid, r) } else { to_position(grid, r) };
                    acc.data.iter_mut().zip(&r.data).for_each(|(a, b)| *a += b);
                }
                acc
            }
        }
    }
}

fn to_fourier(grid: &Grid, mut f: Field) -> Field {
    if !f.fourier {
        grid.forward(&mut f.data);
        f.fourier = true;
    }
    f
}

fn to_position(grid: &Grid, mut f: Field) -> Field {
    if f.fourier {
        grid.inverse(&mut f.data);
        f.fourier = false;
    }
    f
}

/// `out(p) = L(p)v(p) + A(p)·conj(v(p̄))`, where p̄ is the reflected momentum
/// in Fourier space and p itself in position space.
fn apply_pointwise(grid: &Grid, f: Field, coeffs: impl Fn(usize) -> (M4, Option<M4>) + Sync) -> Field {
    let len = grid.len();
    let neg = grid.neg_table();
    let data = &f.data;
    let vals: Vec<[C64; 4]> = (0..len)
        .into_par_iter()
        .map(|p| {
            let (l, a) = coeffs(p);
            let v: [C64; 4] = std::array::from_fn(|c| data[c * len + p]);
            let mut out: [C64; 4] = std::array::from_fn(|r| (0..4).map(|c| l[(r, c)] * v[c]).sum());
            if let Some(a) = a {
                let q = if f.fourier { neg[p] as usize } else { p };
                let w: [C64; 4] = std::array::from_fn(|c| data[c * len + q].conj());
                for (r, o) in out.iter_mut().enumerate() {
                    *o += (0..4).map(|c| a[(r, c)] * w[c]).sum::<C64>();
                }
            }
            out
        })
        .collect();
    let mut out = vec![C64::new(0.0, 0.0); data.len()];
    for (p, v) in vals.iter().enumerate() {
        for (c, z) in v.iter().enumerate() {
            out[c * len + p] = *z;
        }
    }
    Field { fourier: f.fourier, data: out }
}

fn grid_of(o: &GridOperator) -> Option<&Arc<Grid>> {
    match &o.node {
        Node::Multiplier(g, _) => Some(g),
        Node::Symbol(t) => Some(&t.grid),
        _ => None,
    }
}

/// The symbol pair of a constant, multiplier or symbol node on `grid`.
fn as_table(o: &GridOperator, grid: &Arc<Grid>) -> Arc<SymbolTable> {
    let len = grid.len();
    match &o.node {
        Node::Symbol(t) => t.clone(),
        Node::Multiplier(_, s) => Arc::new(SymbolTable {
            grid: grid.clone(),
            l: s.iter().map(|&x| M4::identity() * C64::new(x, 0.0)).collect(),
            a: None,
        }),
        Node::Const(c) => Arc::new(SymbolTable {
            grid: grid.clone(),
            l: vec![c.l; len],
            a: (!c.is_linear()).then(|| vec![c.a; len]),
        }),
        _ => unreachable!("only k-space factors have a symbol"),
    }
}

fn add_kspace(x: &GridOperator, y: &GridOperator) -> GridOperator {
    if let (Node::Multiplier(g, s), Node::Multiplier(_, t)) = (&x.node, &y.node) {
        return op(Node::Multiplier(g.clone(), Arc::new(s.iter().zip(t.iter()).map(|(a, b)| a + b).collect())));
    }
    let grid = grid_of(x).or_else(|| grid_of(y)).expect("a k-space term carries its grid").clone();
    let (tx, ty) = (as_table(x, &grid), as_table(y, &grid));
    let l = tx.l.par_iter().zip(&ty.l).map(|(a, b)| a + b).collect();
    let a = match (&tx.a, &ty.a) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(a.clone()),
        (Some(a), Some(b)) => Some(a.par_iter().zip(b).map(|(p, q)| p + q).collect()),
    };
    op(Node::Symbol(Arc::new(SymbolTable { grid, l, a })))
}

/// `x ∘ y` as a single node when both factors allow it.
fn fuse_pair(x: &GridOperator, y: &GridOperator) -> Option<GridOperator> {
    match (&x.node, &y.node) {
        (Node::Const(a), Node::Const(b)) => Some(GridOperator::constant(a.compose(b))),
        (Node::Position(p), Node::Position(q)) => {
            Some(op(Node::Position(Arc::new(p.iter().zip(q.iter()).map(|(a, b)| a * b).collect()))))
        }
        (Node::Multiplier(g, s), Node::Multiplier(_, t)) => {
            Some(op(Node::Multiplier(g.clone(), Arc::new(s.iter().zip(t.iter()).map(|(a, b)| a * b).collect()))))
        }
        (Node::Const(_) | Node::Multiplier(..) | Node::Symbol(_), Node::Const(_) | Node::Multiplier(..) | Node::Symbol(_)) => {
            let grid = grid_of(x).or_else(|| grid_of(y))?.clone();
            Some(op(Node::Symbol(Arc::new(compose_tables(&as_table(x, &grid), &as_table(y, &grid))))))
        }
        _ => None,
    }
}

/// `(L₁, A₁) ∘ (L₂, A₂) = (L₁L₂ + A₁·conj A₂(−k), L₁A₂ + A₁·conj L₂(−k))`.
fn compose_tables(x: &SymbolTable, y: &SymbolTable) -> SymbolTable {
    let grid = x.grid.clone();
    let neg = grid.neg_table();
    let len = grid.len();
    let l: Vec<M4> = (0..len)
        .into_par_iter()
        .map(|p| {
            let mut m = x.l[p] * y.l[p];
            if let (Some(a1), Some(a2)) = (&x.a, &y.a) {
                m += a1[p] * a2[neg[p] as usize].conjugate();
            }
            m
        })
        .collect();
    let a = if x.a.is_none() && y.a.is_none() {
        None
    } else {
        Some(
            (0..len)
                .into_par_iter()
                .map(|p| {
                    let mut m = M4::zeros();
                    if let Some(a2) = &y.a {
                        m += x.l[p] * a2[p];
                    }
                    if let Some(a1) = &x.a {
                        m += a1[p] * y.l[neg[p] as usize].conjugate();
                    }
                    m
                })
                .collect(),
        )
    };
    SymbolTable { grid, l, a }
}

impl Mul for &GridOperator {
    type Output = GridOperator;
    fn mul(self, rhs: &GridOperator) -> GridOperator {
        self.compose(rhs)
    }
}

impl Add for &GridOperator {
    type Output = GridOperator;
    fn add(self, rhs: &GridOperator) -> GridOperator {
        GridOperator::sum(vec![self.clone(), rhs.clone()])
    }
}

impl Sub for &GridOperator {
    type Output = GridOperator;
    fn sub(self, rhs: &GridOperator) -> GridOperator {
        GridOperator::sum(vec![self.clone(), rhs.scale(C64::new(-1.0, 0.0))])
    }
}

impl Neg for &GridOperator {
    type Output = GridOperator;
    fn neg(self) -> GridOperator {
        self.scale(C64::new(-1.0, 0.0))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GridOperator {
            type Output = GridOperator;
            fn $m(self, rhs: GridOperator) -> GridOperator {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Mul, mul);
forward_owned!(Add, add);
forward_owned!(Sub, sub);
