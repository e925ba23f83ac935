//! Small text formats for vectors and root patterns.
//!
//! Vectors: `e1-e3`, `2e1`, `-3/2e1+[1/2*r3]e2`, `1/2(e1+e2-e3)` or a
//! coordinate list `(1/2, 1/2, -1/2*r3)`.
//!
//! Patterns: `;`-separated terms, each an expression with optional `±`
//! signs and index variables, followed by `:` and comma-separated
//! constraint chains, e.g. `±e_i±e_j : 1<i<j<=n; ±(e1+e2)`. Variables take
//! distinct values in `1..=dim`; `n` is the rank.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::linalg::Vector;
use crate::roots::Vect;

fn perr(src: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{src:?}: {msg}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    Plus,
    Minus,
    Both,
}

#[derive(Clone, Debug)]
enum Index {
    Lit(usize),
    Var(char),
}

#[derive(Clone, Debug)]
enum Atom {
    Basis(FieldElem, Index),
    Group(FieldElem, Vec<Item>),
}

#[derive(Clone, Debug)]
struct Item {
    sign: Sign,
    atom: Atom,
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl std::fmt::Display) -> Error {
        perr(self.src, format!("{msg} at {}", self.pos))
    }

    fn sign(&mut self) -> Option<Sign> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(Sign::Plus)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(Sign::Minus)
            }
            Some('±') => {
                self.pos += 1;
                Some(Sign::Both)
            }
            _ => None,
        }
    }

    fn coefficient(&mut self) -> Result<Option<FieldElem>> {
        if self.eat('[') {
            let start = self.pos;
            while self.peek().is_some_and(|c| c != ']') {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos].iter().collect();
            if !self.eat(']') {
                return Err(self.err("unclosed ["));
            }
            let x = text.parse::<FieldElem>().map_err(|e| self.err(e))?;
            self.eat('*');
            return Ok(Some(x));
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let x = text.parse::<FieldElem>().map_err(|e| self.err(e))?;
        self.eat('*');
        Ok(Some(x))
    }

    fn index(&mut self) -> Result<Index> {
        if self.eat('_') {
            match self.bump() {
                Some(c) if c.is_ascii_lowercase() => return Ok(Index::Var(c)),
                Some(c) if c.is_ascii_digit() => {
                    self.pos -= 1;
                }
                _ => return Err(self.err("expected index")),
            }
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.bump() {
                Some(c) if c.is_ascii_lowercase() => Ok(Index::Var(c)),
                _ => Err(self.err("expected index")),
            };
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let k: usize = text.parse().map_err(|e| self.err(e))?;
        if k == 0 {
            return Err(self.err("indices start at 1"));
        }
        Ok(Index::Lit(k))
    }

    fn items(&mut self, closing: Option<char>) -> Result<Vec<Item>> {
        let mut out = Vec::new();
        loop {
            if self.peek().is_none() || self.peek() == closing {
                break;
            }
            let sign = match self.sign() {
                Some(s) => s,
                None if out.is_empty() => Sign::Plus,
                None => return Err(self.err("expected sign")),
            };
            let coef = self.coefficient()?.unwrap_or_else(FieldElem::one);
            let atom = if self.eat('(') {
                let inner = self.items(Some(')'))?;
                if !self.eat(')') {
                    return Err(self.err("unclosed ("));
                }
                Atom::Group(coef, inner)
            } else if self.eat('e') {
                Atom::Basis(coef, self.index()?)
            } else {
                return Err(self.err("expected e<k> or ("));
            };
            out.push(Item { sign, atom });
        }
        if out.is_empty() {
            return Err(self.err("empty expression"));
        }
        Ok(out)
    }
}

fn variables(items: &[Item], out: &mut BTreeSet<char>) {
    for it in items {
        match &it.atom {
            Atom::Basis(_, Index::Var(c)) => {
                out.insert(*c);
            }
            Atom::Basis(..) => {}
            Atom::Group(_, inner) => variables(inner, out),
        }
    }
}

fn expand(src: &str, items: &[Item], dim: usize, env: &BTreeMap<char, usize>) -> Result<Vec<Vect>> {
    let mut acc = vec![Vector::zero(dim)];
    for it in items {
        let parts: Vec<Vect> = match &it.atom {
            Atom::Basis(c, idx) => {
                let k = match idx {
                    Index::Lit(k) => *k,
                    Index::Var(v) => *env.get(v).ok_or_else(|| perr(src, format!("unbound variable {v}")))?,
                };
                if k > dim {
                    return Err(perr(src, format!("e{k} outside dimension {dim}")));
                }
                vec![Vector::unit(dim, k - 1).scale(c)]
            }
            Atom::Group(c, inner) => expand(src, inner, dim, env)?.into_iter().map(|v| v.scale(c)).collect(),
        };
        let signed: Vec<Vect> = match it.sign {
            Sign::Plus => parts,
            Sign::Minus => parts.iter().map(|v| -v).collect(),
            Sign::Both => parts.iter().flat_map(|v| [v.clone(), -v]).collect(),
        };
        acc = acc.iter().flat_map(|a| signed.iter().map(move |s| a + s)).collect();
    }
    Ok(acc)
}

/// Parses a single vector in `ℝ^dim`.
pub fn parse_vector(src: &str, dim: usize) -> Result<Vect> {
    let t = src.trim();
    if let Some(body) = t.strip_prefix('(').filter(|b| b.ends_with(')') && !b.contains('e')) {
        let body = &body[..body.len() - 1];
        let coords: Vec<FieldElem> =
            body.split(',').map(|c| c.trim().parse::<FieldElem>()).collect::<Result<_>>().map_err(|e| perr(src, e))?;
        if coords.len() != dim {
            return Err(perr(src, format!("expected {dim} coordinates")));
        }
        return Ok(Vector::new(coords));
    }
    let mut p = Parser::new(t);
    let items = p.items(None)?;
    let mut vars = BTreeSet::new();
    variables(&items, &mut vars);
    if !vars.is_empty() || items.iter().any(|i| i.sign == Sign::Both) {
        return Err(perr(src, "a vector cannot contain ± or variables"));
    }
    let v = expand(src, &items, dim, &BTreeMap::new())?;
    Ok(v.into_iter().next().expect("one vector"))
}

#[derive(Clone, Copy, Debug)]
enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
    Ne,
    Eq,
}

#[derive(Clone, Debug)]
enum Operand {
    Int(i64),
    Rank(i64),
    Var(char),
}

fn parse_operand(src: &str, s: &str) -> Result<Operand> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('n') {
        let off = if rest.is_empty() { 0 } else { rest.parse::<i64>().map_err(|e| perr(src, e))? };
        return Ok(Operand::Rank(off));
    }
    if let Ok(k) = s.parse::<i64>() {
        return Ok(Operand::Int(k));
    }
    let mut cs = s.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => Ok(Operand::Var(c)),
        _ => Err(perr(src, format!("bad operand {s:?}"))),
    }
}

fn parse_chain(src: &str, s: &str) -> Result<Vec<(Operand, Cmp, Operand)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.replace('≤', "<=").replace('≥', ">=").replace('≠', "!=");
    let mut operands = Vec::new();
    let mut ops = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut cur = String::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let next = bytes.get(i + 1).copied();
        let op = match (c, next) {
            ('<', Some('=')) => Some((Cmp::Le, 2)),
            ('>', Some('=')) => Some((Cmp::Ge, 2)),
            ('!', Some('=')) => Some((Cmp::Ne, 2)),
            ('<', _) => Some((Cmp::Lt, 1)),
            ('>', _) => Some((Cmp::Gt, 1)),
            ('=', _) => Some((Cmp::Eq, 1)),
            _ => None,
        };
        match op {
            Some((o, w)) => {
                operands.push(parse_operand(src, &cur)?);
                cur.clear();
                ops.push(o);
                i += w;
            }
            None => {
                cur.push(c);
                i += 1;
            }
        }
    }
    operands.push(parse_operand(src, &cur)?);
    if ops.is_empty() {
        return Err(perr(src, format!("constraint without comparison: {s}")));
    }
    Ok(ops.iter().enumerate().map(|(k, &o)| (operands[k].clone(), o, operands[k + 1].clone())).collect())
}

fn holds(c: &(Operand, Cmp, Operand), rank: usize, env: &BTreeMap<char, usize>) -> Option<bool> {
    let val = |o: &Operand| -> Option<i64> {
        match o {
            Operand::Int(k) => Some(*k),
            Operand::Rank(off) => Some(rank as i64 + off),
            Operand::Var(v) => env.get(v).map(|&x| x as i64),
        }
    };
    let (a, b) = (val(&c.0)?, val(&c.2)?);
    Some(match c.1 {
        Cmp::Lt => a < b,
        Cmp::Le => a <= b,
        Cmp::Gt => a > b,
        Cmp::Ge => a >= b,
        Cmp::Ne => a != b,
        Cmp::Eq => a == b,
    })
}

/// Expands a pattern into its set of nonzero vectors in `ℝ^dim`.
pub fn expand_pattern(src: &str, dim: usize, rank: usize) -> Result<BTreeSet<Vect>> {
    let mut out = BTreeSet::new();
    for term in src.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (expr, cons) = match term.split_once(':') {
            Some((e, c)) => (e, c),
            None => (term, ""),
        };
        let items = Parser::new(expr).items(None)?;
        let mut vars = BTreeSet::new();
        variables(&items, &mut vars);
        let constraints: Vec<_> = cons
            .split(',')
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| parse_chain(src, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let vars: Vec<char> = vars.into_iter().collect();
        let mut env = BTreeMap::new();
        assign(src, &items, &vars, 0, dim, rank, &constraints, &mut env, &mut out)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    src: &str,
    items: &[Item],
    vars: &[char],
    k: usize,
    dim: usize,
    rank: usize,
    constraints: &[(Operand, Cmp, Operand)],
    env: &mut BTreeMap<char, usize>,
    out: &mut BTreeSet<Vect>,
) -> Result<()> {
    for c in constraints {
        if holds(c, rank, env) == Some(false) {
            return Ok(());
        }
    }
    if k == vars.len() {
        for v in expand(src, items, dim, env)? {
            if !v.is_zero() {
                out.insert(v);
            }
        }
        return Ok(());
    }
    for x in 1..=dim {
        if env.values().any(|&y| y == x) {
            continue;
        }
        env.insert(vars[k], x);
        assign(src, items, vars, k + 1, dim, rank, constraints, env, out)?;
        env.remove(&vars[k]);
    }
    Ok(())
}

/// Formats a vector in the `e`-notation accepted by [`parse_vector`].
pub fn format_vector(v: &Vect) -> String {
    let mut out = String::new();
    for (i, c) in v.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (neg, abs) = if c.sign() < 0 { (true, -c) } else { (false, c.clone()) };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !abs.is_one() {
            if abs.is_rational() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("[{abs}]"));
            }
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vect {
        Vector::new(c.iter().map(|&x| FieldElem::from_int(x)).collect())
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("e1-e3", 4).unwrap(), v(&[1, 0, -1, 0]));
        assert_eq!(parse_vector("-e3 - e4", 4).unwrap(), v(&[0, 0, -1, -1]));
        assert_eq!(parse_vector("2e1", 2).unwrap(), v(&[2, 0]));
        assert_eq!(parse_vector("1/2(e1+e2)", 2).unwrap(), Vector::new(vec![FieldElem::ratio(1, 2); 2]));
        let g = parse_vector("-3/2e1+[1/2*r3]e2", 2).unwrap();
        assert_eq!(g.norm_sq(), FieldElem::from_int(3));
        assert_eq!(parse_vector("(1/2, -1/2)", 2).unwrap(), Vector::new(vec![FieldElem::ratio(1, 2), FieldElem::ratio(-1, 2)]));
        assert!(parse_vector("e5", 4).is_err());
        assert!(parse_vector("±e1", 4).is_err());
        assert!(parse_vector("e1e2", 4).is_err());
    }

    #[test]
    fn round_trip() {
        for s in ["e1-e3", "2e1", "-3/2e1+[1/2*r3]e2", "1/2e1-1/2e2"] {
            let x = parse_vector(s, 3).unwrap();
            assert_eq!(parse_vector(&format_vector(&x), 3).unwrap(), x);
        }
    }

    #[test]
    fn patterns() {
        let p = expand_pattern("±e_i±e_j : 1<=i<j<=n", 4, 4).unwrap();
        assert_eq!(p.len(), 4 * 3 * 2);
        let p = expand_pattern("±e_i : i>1; ±e_i±e_j : 1<i<j<=n", 3, 3).unwrap();
        assert_eq!(p.len(), 4 + 4);
        let p = expand_pattern("±(e1+e2); ±2e_i : i>=3", 4, 4).unwrap();
        assert_eq!(p.len(), 2 + 4);
        let p = expand_pattern("±e1±e2; ±2e1; ±2e2", 2, 2).unwrap();
        assert_eq!(p.len(), 8);
        let p = expand_pattern("e_i-e_j : i!=j, i<=n-1, j<=n-1", 4, 4).unwrap();
        assert_eq!(p.len(), 6);
    }
}
