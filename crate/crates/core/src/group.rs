//! Finite groups as Cayley tables.
//!
//! Elements are the indices `0..n`; index 0 is always the identity. Every
//! constructor documents its element ordering, since that ordering fixes the
//! identification of `F_p G` with `F_p^n`.

use crate::error::{Error, Result};
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Hard cap on group order.
pub const MAX_ORDER: usize = 4096;

/// Tables up to this order get the full `n^3` associativity check; larger
/// ones use Light's test over a generating set.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    element_orders: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Builds a group from a Cayley table `table[i][j] = index of g_i g_j`
    /// and runs the full audit. If the identity is not at index 0 the
    /// elements are relabelled so that it is, keeping the relative order of
    /// the others.
    pub fn from_table(
        name: impl Into<String>,
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row of length {} in a table of order {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range")));
                }
                flat.push(x as u16);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::InvalidTable(format!(
                    "{} labels for {n} elements",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|j| flat[e * n + j] as usize == j && flat[j * n + e] as usize == j)
            })
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let (flat, labels) = if identity == 0 {
            (flat, labels)
        } else {
            relabel_identity_first(n, identity, &flat, labels)
        };
        Group::assemble(name.into(), n, flat, labels)
    }

    fn assemble(name: String, n: usize, table: Vec<u16>, labels: Vec<String>) -> Result<Group> {
        let mut seen = vec![0usize; n];
        for i in 0..n {
            if table[i * n] as usize != i || table[i] as usize != i {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
            for (stamp, j) in (0..n).map(|j| (2 * i + 1, j)) {
                let x = table[i * n + j] as usize;
                if seen[x] == stamp {
                    return Err(Error::InvalidTable(format!("row {i} repeats an entry")));
                }
                seen[x] = stamp;
            }
            for j in 0..n {
                let x = table[j * n + i] as usize;
                if seen[x] == 2 * i + 2 {
                    return Err(Error::InvalidTable(format!("column {i} repeats an entry")));
                }
                seen[x] = 2 * i + 2;
            }
        }
        let mut inverse = vec![0usize; n];
        for (i, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n).find(|&j| table[i * n + j] == 0).expect("latin row");
        }
        let mut g = Group {
            name,
            order: n,
            table,
            inverse,
            labels,
            element_orders: Vec::new(),
            generators: Vec::new(),
        };
        g.generators = g.greedy_generators();
        if !g.is_associative() {
            return Err(Error::InvalidTable("operation is not associative".into()));
        }
        g.element_orders = (0..n).map(|i| g.compute_element_order(i)).collect();
        Ok(g)
    }

    fn from_fn(
        name: String,
        n: usize,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Group> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(mul(i, j) as u16);
            }
        }
        Group::assemble(name, n, table, labels)
    }

    /// Cyclic group `C_n`; element `i` is `r^i`.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        let labels = (0..n).map(power_label).collect();
        Group::from_fn(format!("C{n}"), n, labels, |i, j| (i + j) % n)
    }

    pub fn trivial() -> Group {
        Group::cyclic(1).expect("trivial group")
    }

    /// Dihedral group of order `2m`: indices `0..m` are the rotations `r^i`,
    /// indices `m..2m` the reflections `r^i s`, with `s r = r^{-1} s`.
    pub fn dihedral(m: usize) -> Result<Group> {
        if m == 0 {
            return Err(Error::InvalidArgument("dihedral group needs m >= 1".into()));
        }
        let mut labels: Vec<String> = (0..m).map(power_label).collect();
        for i in 0..m {
            labels.push(if i == 0 {
                "s".to_string()
            } else {
                format!("{}s", power_label(i))
            });
        }
        Group::from_fn(format!("D{m}"), 2 * m, labels, |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
            rot + m * ((b + d) % 2)
        })
    }

    /// Symmetric group on `k <= 5` points, elements listed in lexicographic
    /// order of their one-line notation. The product `g h` applies `g`
    /// first, then `h`.
    pub fn symmetric(k: usize) -> Result<Group> {
        if k == 0 || k > 5 {
            return Err(Error::InvalidArgument(format!(
                "symmetric group degree {k} outside 1..=5"
            )));
        }
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).expect("perm");
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|&x| char::from(b'1' + x as u8)).collect())
            .collect();
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        let mut prod = vec![0usize; k];
        for g in &perms {
            for h in &perms {
                for x in 0..k {
                    prod[x] = h[g[x]];
                }
                table.push(index(&prod) as u16);
            }
        }
        Group::assemble(format!("S{k}"), n, table, labels)
    }

    /// Quaternion group `Q8`, ordered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Group {
        // unit products: (unit, sign) for e_a * e_b with units 1,i,j,k
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Group::from_fn("Q8".into(), 8, labels, |x, y| {
            let (u, s) = UNIT[x / 2][y / 2];
            2 * u + (s + x % 2 + y % 2) % 2
        })
        .expect("Q8")
    }

    /// Elementary abelian group `(Z/p)^m`. Element index `i` is the vector of
    /// base-`p` digits of `i`, most significant digit first, so for `p = 2`
    /// the product of `i` and `j` is `i ^ j`.
    pub fn elementary_abelian(p: usize, m: usize) -> Result<Group> {
        if p < 2 || !(2..p).all(|d| p % d != 0) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let n =
            p.checked_pow(m as u32)
                .filter(|&n| n <= MAX_ORDER)
                .ok_or(Error::OrderTooLarge {
                    order: usize::MAX,
                    max: MAX_ORDER,
                })?;
        let digits = |mut i: usize| {
            let mut d = vec![0usize; m];
            for slot in d.iter_mut().rev() {
                *slot = i % p;
                i /= p;
            }
            d
        };
        let labels = (0..n)
            .map(|i| {
                let d = digits(i);
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Group::from_fn(format!("E{p}^{m}"), n, labels, |x, y| {
            let (a, b) = (digits(x), digits(y));
            a.iter()
                .zip(&b)
                .fold(0, |acc, (u, v)| acc * p + (u + v) % p)
        })
    }

    /// `a × b`, with `(i, j)` at index `i * |b| + j`.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
        let nb = b.order;
        let n = a.order * nb;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut labels = Vec::with_capacity(n);
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("({la},{lb})"));
            }
        }
        Group::from_fn(format!("{}x{}", a.name, b.name), n, labels, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.element_orders[i]
    }

    /// A generating set found greedily in index order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The table as nested rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    fn compute_element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    fn closure_of(&self, seeds: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = self.closure_of(&gens);
        for i in 1..self.order {
            if !member[i] {
                gens.push(i);
                member = self.closure_of(&gens);
            }
        }
        gens
    }

    fn is_associative(&self) -> bool {
        let n = self.order;
        let middles: Vec<usize> = if n <= FULL_ASSOCIATIVITY_LIMIT {
            (0..n).collect()
        } else {
            self.generators.clone()
        };
        for &s in &middles {
            for x in 0..n {
                let xs = self.mul(x, s);
                for y in 0..n {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.order {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.order,
            });
        }
        Ok(())
    }

    /// Smallest subgroup containing `seeds`.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Result<Subgroup<'_>> {
        for &s in seeds {
            self.check_index(s)?;
        }
        let member = self.closure_of(seeds);
        Ok(Subgroup {
            parent: self,
            members: (0..self.order).filter(|&i| member[i]).collect(),
        })
    }

    /// Whether `members` contains the identity and is closed under products
    /// and inverses.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &m in members {
            if m >= self.order {
                return false;
            }
            member[m] = true;
        }
        if !member[0] {
            return false;
        }
        let elems: Vec<usize> = (0..self.order).filter(|&i| member[i]).collect();
        elems
            .iter()
            .all(|&a| member[self.inv(a)] && elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Validates `members` as a subgroup.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup<'_>> {
        if !self.is_subgroup(members) {
            return Err(Error::InvalidArgument("not a subgroup".into()));
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        Ok(Subgroup {
            parent: self,
            members,
        })
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            members: (0..self.order).collect(),
        }
    }

    pub fn identity_subgroup(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            members: vec![0],
        }
    }

    /// Largest power of `p` dividing `|G|`.
    pub fn p_part(&self, p: usize) -> usize {
        p_part(self.order, p)
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        self.p_part(p) == self.order
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> bool {
        let mut member = vec![false; self.order];
        for &m in &h.members {
            member[m] = true;
        }
        self.generators.iter().all(|&g| {
            h.members
                .iter()
                .all(|&x| member[self.mul(self.mul(self.inv(g), x), g)])
        })
    }

    /// The elements of order prime to `p`, when they form a normal subgroup
    /// of index `|G|_p`.
    pub fn normal_p_complement(&self, p: usize) -> Option<Subgroup<'_>> {
        let members: Vec<usize> = (0..self.order)
            .filter(|&i| self.element_order(i) % p != 0)
            .collect();
        if members.len() * self.p_part(p) != self.order || !self.is_subgroup(&members) {
            return None;
        }
        let h = Subgroup {
            parent: self,
            members,
        };
        self.is_normal(&h).then_some(h)
    }

    /// Right cosets `H g`, ordered by smallest uncovered representative.
    /// The first block is `H` itself; each block is sorted.
    pub fn right_cosets(&self, h: &Subgroup<'_>) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.order];
        let mut blocks = Vec::new();
        for g in 0..self.order {
            if covered[g] {
                continue;
            }
            let mut block: Vec<usize> = h.members.iter().map(|&x| self.mul(x, g)).collect();
            block.sort_unstable();
            for &x in &block {
                covered[x] = true;
            }
            blocks.push(block);
        }
        blocks
    }

    /// One representative per right coset (the smallest index in each).
    pub fn right_transversal(&self, h: &Subgroup<'_>) -> Vec<usize> {
        self.right_cosets(h).iter().map(|b| b[0]).collect()
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    if p < 2 || n == 0 {
        return 1;
    }
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

fn power_label(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "r".into(),
        _ => format!("r^{i}"),
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn relabel_identity_first(
    n: usize,
    identity: usize,
    table: &[u16],
    labels: Vec<String>,
) -> (Vec<u16>, Vec<String>) {
    // new index -> old index
    let order: Vec<usize> = core::iter::once(identity)
        .chain((0..n).filter(|&i| i != identity))
        .collect();
    let mut old_to_new = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        old_to_new[old] = new;
    }
    let mut out = Vec::with_capacity(n * n);
    for &oi in &order {
        for &oj in &order {
            out.push(old_to_new[table[oi * n + oj] as usize] as u16);
        }
    }
    let new_labels = order.iter().map(|&o| labels[o].clone()).collect();
    (out, new_labels)
}

/// A subgroup of a [`Group`], stored as its sorted member indices.
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    parent: &'g Group,
    members: Vec<usize>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}
