//! Expression-tree encoding for genetic programming.
//!
//! Internal nodes are Boolean operators, leaves are input variables. A tree
//! is turned into a truth table by evaluating it over all `2^n` assignments
//! at once, bit-sliced across machine words.

use std::fmt;

use rand::Rng;

use crate::bits::Bits;
use crate::boolfun::BooleanFunction;
use crate::error::{Error, Result};

/// Binary operators of the function set. `And2` is AND with the second
/// input inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpOp {
    Or,
    Xor,
    And,
    And2,
    Xnor,
}

impl GpOp {
    pub const ALL: [GpOp; 5] = [GpOp::Or, GpOp::Xor, GpOp::And, GpOp::And2, GpOp::Xnor];

    fn name(self) -> &'static str {
        match self {
            GpOp::Or => "OR",
            GpOp::Xor => "XOR",
            GpOp::And => "AND",
            GpOp::And2 => "AND2",
            GpOp::Xnor => "XNOR",
        }
    }
}

/// A node of a GP tree. Variables are numbered `1..=n`, with `x1` the most
/// significant input bit. `If(c, t, e)` returns `t` when `c` is true and
/// `e` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GpNode {
    Var(u8),
    Not(Box<GpNode>),
    Op(GpOp, Box<GpNode>, Box<GpNode>),
    If(Box<GpNode>, Box<GpNode>, Box<GpNode>),
}

impl GpNode {
    pub fn arity(&self) -> usize {
        match self {
            GpNode::Var(_) => 0,
            GpNode::Not(_) => 1,
            GpNode::Op(..) => 2,
            GpNode::If(..) => 3,
        }
    }

    pub fn children(&self) -> Vec<&GpNode> {
        match self {
            GpNode::Var(_) => vec![],
            GpNode::Not(a) => vec![a],
            GpNode::Op(_, a, b) => vec![a, b],
            GpNode::If(a, b, c) => vec![a, b, c],
        }
    }

    fn children_mut(&mut self) -> Vec<&mut GpNode> {
        match self {
            GpNode::Var(_) => vec![],
            GpNode::Not(a) => vec![a],
            GpNode::Op(_, a, b) => vec![a, b],
            GpNode::If(a, b, c) => vec![a, b, c],
        }
    }

    /// Longest root-to-leaf path in edges; a lone leaf has depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn max_var(&self) -> u8 {
        match self {
            GpNode::Var(v) => *v,
            _ => self
                .children()
                .iter()
                .map(|c| c.max_var())
                .max()
                .unwrap_or(0),
        }
    }

    /// Node at preorder index `i`, if it exists.
    pub fn node_at(&self, i: usize) -> Option<&GpNode> {
        fn walk<'a>(node: &'a GpNode, i: usize, counter: &mut usize) -> Option<&'a GpNode> {
            if *counter == i {
                return Some(node);
            }
            *counter += 1;
            for child in node.children() {
                if let Some(found) = walk(child, i, counter) {
                    return Some(found);
                }
            }
            None
        }
        walk(self, i, &mut 0)
    }

    /// Replaces the subtree at preorder index `i`; returns false when the
    /// index is out of range.
    pub fn replace_at(&mut self, i: usize, replacement: GpNode) -> bool {
        fn walk(node: &mut GpNode, i: usize, counter: &mut usize, repl: &mut Option<GpNode>) -> bool {
            if *counter == i {
                *node = repl.take().unwrap();
                return true;
            }
            *counter += 1;
            for child in node.children_mut() {
                if walk(child, i, counter, repl) {
                    return true;
                }
            }
            false
        }
        walk(self, i, &mut 0, &mut Some(replacement))
    }

    /// Depth (in edges from the root) of the node at preorder index `i`.
    pub fn depth_of(&self, i: usize) -> Option<usize> {
        fn walk(node: &GpNode, i: usize, counter: &mut usize, depth: usize) -> Option<usize> {
            if *counter == i {
                return Some(depth);
            }
            *counter += 1;
            for child in node.children() {
                if let Some(found) = walk(child, i, counter, depth + 1) {
                    return Some(found);
                }
            }
            None
        }
        walk(self, i, &mut 0, 0)
    }

    /// Node reached by following child indices from the root.
    pub fn node_at_path(&self, path: &[u8]) -> Option<&GpNode> {
        let mut node = self;
        for &step in path {
            node = *node.children().get(step as usize)?;
        }
        Some(node)
    }

    pub fn replace_at_path(&mut self, path: &[u8], replacement: GpNode) -> bool {
        let mut node = self;
        for &step in path {
            let mut children = node.children_mut();
            match children.len() > step as usize {
                true => node = children.swap_remove(step as usize),
                false => return false,
            }
        }
        *node = replacement;
        true
    }

    /// All root-to-node paths, in preorder.
    pub fn paths(&self) -> Vec<Vec<u8>> {
        fn walk(node: &GpNode, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            out.push(prefix.clone());
            for (i, child) in node.children().into_iter().enumerate() {
                prefix.push(i as u8);
                walk(child, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::with_capacity(self.size());
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Bit-sliced values of each input variable over all `2^n` assignments:
/// `mask(j)` holds the value of `x_j` at every truth-table index.
pub struct VarMasks {
    n: usize,
    masks: Vec<Bits>,
}

impl VarMasks {
    pub fn new(n: usize) -> Self {
        let len = 1usize << n;
        let masks = (1..=n)
            .map(|j| Bits::from_fn(len, |i| (i >> (n - j)) & 1 == 1))
            .collect();
        VarMasks { n, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self, var: u8) -> &Bits {
        &self.masks[var as usize - 1]
    }
}

/// A complete GP individual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpTree {
    pub root: GpNode,
}

impl GpTree {
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn size(&self) -> usize {
        self.root.size()
    }

    /// Ramped half-and-half sampling: target depth uniform in
    /// `2..=max_depth`, grown either full or free-form with equal
    /// probability. All leaves are variables in `1..=n`.
    pub fn random<R: Rng + ?Sized>(
        n: usize,
        max_depth: usize,
        include_if: bool,
        rng: &mut R,
    ) -> Self {
        let depth = rng.random_range(2..=max_depth);
        let root = if rng.random::<bool>() {
            full_node(n, depth, include_if, rng)
        } else {
            grow_node(n, depth, include_if, rng)
        };
        GpTree { root }
    }

    /// Evaluates the tree over all `2^n` assignments.
    pub fn evaluate(&self, masks: &VarMasks) -> BooleanFunction {
        assert!(
            self.root.max_var() as usize <= masks.n(),
            "tree uses variables beyond x{}",
            masks.n()
        );
        let len = 1usize << masks.n();
        let words = eval_words(&self.root, masks);
        BooleanFunction::new(masks.n(), Bits::from_words(len, words)).unwrap()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let root = parse_node(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!(
                "trailing characters after expression at offset {pos}"
            )));
        }
        Ok(GpTree { root })
    }
}

/// Evaluates a tree over all assignments of `n` variables; convenience
/// wrapper that builds the variable masks on the fly.
pub fn evaluate_tree(tree: &GpTree, n: usize) -> BooleanFunction {
    tree.evaluate(&VarMasks::new(n))
}

fn eval_words(node: &GpNode, masks: &VarMasks) -> Vec<u64> {
    match node {
        GpNode::Var(v) => masks.mask(*v).words().to_vec(),
        GpNode::Not(a) => eval_words(a, masks).iter().map(|w| !w).collect(),
        GpNode::Op(op, a, b) => {
            let (wa, wb) = (eval_words(a, masks), eval_words(b, masks));
            wa.iter()
                .zip(&wb)
                .map(|(&x, &y)| match op {
                    GpOp::Or => x | y,
                    GpOp::Xor => x ^ y,
                    GpOp::And => x & y,
                    GpOp::And2 => x & !y,
                    GpOp::Xnor => !(x ^ y),
                })
                .collect()
        }
        GpNode::If(c, t, e) => {
            let (wc, wt, we) = (
                eval_words(c, masks),
                eval_words(t, masks),
                eval_words(e, masks),
            );
            wc.iter()
                .zip(wt.iter().zip(&we))
                .map(|(&c, (&t, &e))| (c & t) | (!c & e))
                .collect()
        }
    }
}

/// Grows a node choosing uniformly among variables and operators, leaves
/// forced at the depth limit.
pub fn grow_node<R: Rng + ?Sized>(
    n: usize,
    depth_left: usize,
    include_if: bool,
    rng: &mut R,
) -> GpNode {
    let functions = if include_if { 7 } else { 6 };
    if depth_left == 0 || rng.random_range(0..n + functions) < n {
        return GpNode::Var(rng.random_range(1..=n) as u8);
    }
    random_function(n, depth_left, include_if, rng, grow_node)
}

/// Full method: operators all the way down to the depth limit.
pub fn full_node<R: Rng + ?Sized>(
    n: usize,
    depth_left: usize,
    include_if: bool,
    rng: &mut R,
) -> GpNode {
    if depth_left == 0 {
        return GpNode::Var(rng.random_range(1..=n) as u8);
    }
    random_function(n, depth_left, include_if, rng, full_node)
}

fn random_function<R: Rng + ?Sized>(
    n: usize,
    depth_left: usize,
    include_if: bool,
    rng: &mut R,
    child: fn(usize, usize, bool, &mut R) -> GpNode,
) -> GpNode {
    let choice = rng.random_range(0..if include_if { 7 } else { 6 });
    match choice {
        0 => GpNode::Not(Box::new(child(n, depth_left - 1, include_if, rng))),
        1..=5 => GpNode::Op(
            GpOp::ALL[choice - 1],
            Box::new(child(n, depth_left - 1, include_if, rng)),
            Box::new(child(n, depth_left - 1, include_if, rng)),
        ),
        _ => GpNode::If(
            Box::new(child(n, depth_left - 1, include_if, rng)),
            Box::new(child(n, depth_left - 1, include_if, rng)),
            Box::new(child(n, depth_left - 1, include_if, rng)),
        ),
    }
}

impl fmt::Display for GpNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpNode::Var(v) => write!(f, "x{v}"),
            GpNode::Not(a) => write!(f, "NOT({a})"),
            GpNode::Op(op, a, b) => write!(f, "{}({a},{b})", op.name()),
            GpNode::If(c, t, e) => write!(f, "IF({c},{t},{e})"),
        }
    }
}

impl fmt::Display for GpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<GpNode> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_alphanumeric() {
        *pos += 1;
    }
    let word = std::str::from_utf8(&bytes[start..*pos]).unwrap();
    if word.is_empty() {
        return Err(Error::Parse(format!("expected a symbol at offset {start}")));
    }
    if let Some(digits) = word.strip_prefix('x') {
        let v: u8 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable {word:?}")))?;
        if v == 0 {
            return Err(Error::Parse("variables are numbered from x1".into()));
        }
        return Ok(GpNode::Var(v));
    }
    let arity = match word {
        "NOT" => 1,
        "OR" | "XOR" | "AND" | "AND2" | "XNOR" => 2,
        "IF" => 3,
        _ => return Err(Error::Parse(format!("unknown operator {word:?}"))),
    };
    expect(bytes, pos, b'(')?;
    let mut args = Vec::with_capacity(arity);
    for i in 0..arity {
        if i > 0 {
            expect(bytes, pos, b',')?;
        }
        args.push(parse_node(bytes, pos)?);
    }
    expect(bytes, pos, b')')?;
    let mut args = args.into_iter();
    Ok(match word {
        "NOT" => GpNode::Not(Box::new(args.next().unwrap())),
        "IF" => GpNode::If(
            Box::new(args.next().unwrap()),
            Box::new(args.next().unwrap()),
            Box::new(args.next().unwrap()),
        ),
        op => {
            let op = GpOp::ALL
                .into_iter()
                .find(|candidate| candidate.name() == op)
                .unwrap();
            GpNode::Op(
                op,
                Box::new(args.next().unwrap()),
                Box::new(args.next().unwrap()),
            )
        }
    })
}

fn expect(bytes: &[u8], pos: &mut usize, c: u8) -> Result<()> {
    if bytes.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "expected {:?} at offset {}",
            c as char, pos
        )))
    }
}
