//! GP variation: five crossover variants chosen uniformly per event, plus
//! subtree mutation. Any offspring exceeding the depth cap is discarded in
//! favour of a copy of the first parent.

use rand::Rng;

use crate::genotypes::{grow_node, GpNode, GpTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpCrossoverKind {
    Subtree,
    Uniform,
    SizeFair,
    OnePoint,
    ContextPreserving,
}

impl GpCrossoverKind {
    pub const ALL: [GpCrossoverKind; 5] = [
        GpCrossoverKind::Subtree,
        GpCrossoverKind::Uniform,
        GpCrossoverKind::SizeFair,
        GpCrossoverKind::OnePoint,
        GpCrossoverKind::ContextPreserving,
    ];
}

/// Crosses two trees with a uniformly chosen variant and repairs depth by
/// returning a copy of `a` whenever the offspring would exceed `max_depth`.
pub fn gp_crossover<R: Rng + ?Sized>(
    a: &GpTree,
    b: &GpTree,
    max_depth: usize,
    rng: &mut R,
) -> GpTree {
    let kind = GpCrossoverKind::ALL[rng.random_range(0..GpCrossoverKind::ALL.len())];
    let child = gp_crossover_with(kind, a, b, rng);
    if child.depth() > max_depth {
        a.clone()
    } else {
        child
    }
}

/// Applies one specific crossover variant without depth repair.
pub fn gp_crossover_with<R: Rng + ?Sized>(
    kind: GpCrossoverKind,
    a: &GpTree,
    b: &GpTree,
    rng: &mut R,
) -> GpTree {
    match kind {
        GpCrossoverKind::Subtree => subtree_crossover(a, b, rng),
        GpCrossoverKind::Uniform => GpTree {
            root: uniform_node(&a.root, &b.root, rng),
        },
        GpCrossoverKind::SizeFair => size_fair_crossover(a, b, rng),
        GpCrossoverKind::OnePoint => one_point_crossover(a, b, rng),
        GpCrossoverKind::ContextPreserving => context_preserving_crossover(a, b, rng),
    }
}

/// Replaces a uniformly chosen subtree of `a` with a uniformly chosen
/// subtree of `b`.
fn subtree_crossover<R: Rng + ?Sized>(a: &GpTree, b: &GpTree, rng: &mut R) -> GpTree {
    let i = rng.random_range(0..a.size());
    let j = rng.random_range(0..b.size());
    let donor = b.root.node_at(j).unwrap().clone();
    let mut child = a.clone();
    child.root.replace_at(i, donor);
    child
}

/// Walks the common region of both parents, picking each node label with a
/// fair coin; where the shapes diverge the whole subtree is copied from the
/// chosen parent.
fn uniform_node<R: Rng + ?Sized>(a: &GpNode, b: &GpNode, rng: &mut R) -> GpNode {
    if a.arity() != b.arity() || a.arity() == 0 {
        return if rng.random::<bool>() {
            a.clone()
        } else {
            b.clone()
        };
    }
    let label_source = if rng.random::<bool>() { a } else { b };
    let children: Vec<GpNode> = a
        .children()
        .into_iter()
        .zip(b.children())
        .map(|(ca, cb)| uniform_node(ca, cb, rng))
        .collect();
    rebuild(label_source, children)
}

fn rebuild(label: &GpNode, mut children: Vec<GpNode>) -> GpNode {
    let mut take = || Box::new(children.remove(0));
    match label {
        GpNode::Var(v) => GpNode::Var(*v),
        GpNode::Not(_) => GpNode::Not(take()),
        GpNode::Op(op, ..) => GpNode::Op(*op, take(), take()),
        GpNode::If(..) => GpNode::If(take(), take(), take()),
    }
}

/// Picks a crossover point in `a`, then replaces it with the subtree of `b`
/// whose size is closest to the removed one (ties resolved uniformly).
fn size_fair_crossover<R: Rng + ?Sized>(a: &GpTree, b: &GpTree, rng: &mut R) -> GpTree {
    let i = rng.random_range(0..a.size());
    let removed = a.root.node_at(i).unwrap().size();
    let mut best_diff = usize::MAX;
    let mut candidates = Vec::new();
    for j in 0..b.size() {
        let diff = b.root.node_at(j).unwrap().size().abs_diff(removed);
        if diff < best_diff {
            best_diff = diff;
            candidates.clear();
        }
        if diff == best_diff {
            candidates.push(j);
        }
    }
    let j = if candidates.len() > 1 {
        candidates[rng.random_range(0..candidates.len())]
    } else {
        candidates[0]
    };
    let donor = b.root.node_at(j).unwrap().clone();
    let mut child = a.clone();
    child.root.replace_at(i, donor);
    child
}

/// Paths of the common region: both trees have a node there and every node
/// along the way has matching arity.
fn common_region(a: &GpNode, b: &GpNode) -> Vec<Vec<u8>> {
    fn walk(a: &GpNode, b: &GpNode, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        out.push(prefix.clone());
        if a.arity() == b.arity() {
            for (i, (ca, cb)) in a.children().into_iter().zip(b.children()).enumerate() {
                prefix.push(i as u8);
                walk(ca, cb, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(a, b, &mut Vec::new(), &mut out);
    out
}

/// Swaps the subtrees at one uniformly chosen point of the common region.
fn one_point_crossover<R: Rng + ?Sized>(a: &GpTree, b: &GpTree, rng: &mut R) -> GpTree {
    let region = common_region(&a.root, &b.root);
    let path = &region[rng.random_range(0..region.len())];
    let donor = b.root.node_at_path(path).unwrap().clone();
    let mut child = a.clone();
    child.root.replace_at_path(path, donor);
    child
}

/// Swaps subtrees at a coordinate (root-to-node path) that exists in both
/// parents, so the donated material keeps its structural position.
fn context_preserving_crossover<R: Rng + ?Sized>(a: &GpTree, b: &GpTree, rng: &mut R) -> GpTree {
    let paths_b = b.root.paths();
    let shared: Vec<&Vec<u8>> = paths_b
        .iter()
        .filter(|path| a.root.node_at_path(path).is_some())
        .collect();
    let path = shared[rng.random_range(0..shared.len())];
    let donor = b.root.node_at_path(path).unwrap().clone();
    let mut child = a.clone();
    child.root.replace_at_path(path, donor);
    child
}

/// With probability `p_mut`, replaces a uniformly chosen node by a freshly
/// grown subtree that respects the depth cap.
pub fn subtree_mutation<R: Rng + ?Sized>(
    t: &GpTree,
    p_mut: f64,
    n: usize,
    max_depth: usize,
    include_if: bool,
    rng: &mut R,
) -> GpTree {
    let mut child = t.clone();
    if rng.random_bool(p_mut) {
        let i = rng.random_range(0..child.size());
        let budget = max_depth - child.root.depth_of(i).unwrap().min(max_depth);
        let subtree = grow_node(n, budget, include_if, rng);
        child.root.replace_at(i, subtree);
    }
    child
}
