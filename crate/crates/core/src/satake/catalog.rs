use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use evalexpr::{eval_boolean_with_context, eval_int_with_context, ContextWithMutableVariables, HashMapContext, Value};
use serde::{Deserialize, Serialize};

use super::names::{ambient_type, canonical_name, descriptor_type, display_simple, normalize};
use crate::chevalley::InvolutionSpec;
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Series};

const SATAKE_JSON: &str = include_str!("../../data/satake.json");
const PAIRS_JSON: &str = include_str!("../../data/pairs.json");

#[derive(Debug, Deserialize)]
struct CatalogFile {
    version: u32,
    families: Vec<FamilyDef>,
}

#[derive(Debug, Deserialize)]
struct ParamDef {
    name: String,
    from: String,
    to: String,
}

#[derive(Debug, Deserialize)]
struct AliasDef {
    name: String,
    #[serde(default)]
    when: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum NodeRule {
    Expr(String),
    List(Vec<usize>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ArrowRule {
    Expr(String),
    List(Vec<(usize, usize)>),
}

#[derive(Debug, Deserialize)]
struct FamilyDef {
    id: String,
    series: Series,
    when: String,
    #[serde(default)]
    params: Vec<ParamDef>,
    #[serde(default, rename = "let")]
    lets: Vec<(String, String)>,
    h: String,
    real_form: String,
    #[serde(default)]
    tag: Option<String>,
    #[serde(default)]
    aliases: Vec<AliasDef>,
    black: NodeRule,
    arrow: ArrowRule,
}

#[derive(Debug, Deserialize)]
struct PairsFile {
    version: u32,
    involutions: HashMap<String, InvolutionDef>,
}

#[derive(Debug, Deserialize)]
struct InvolutionDef {
    perm: PermRule,
    negate: NodeRule,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PermRule {
    Expr(String),
    List(Vec<usize>),
}

/// Satake diagram: black nodes and arrows, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatakeDiagram {
    pub cartan_type: CartanType,
    pub black: BTreeSet<usize>,
    pub arrows: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Partner of node `i` under the arrows (itself if none).
    pub fn partner(&self, i: usize) -> usize {
        for &(a, b) in &self.arrows {
            if a == i {
                return b;
            }
            if b == i {
                return a;
            }
        }
        i
    }

    /// Real rank: white nodes modulo arrows.
    pub fn restricted_rank(&self) -> usize {
        let white = self.rank() - self.black.len();
        white - self.arrows.len()
    }

    fn validate(&self) -> Result<()> {
        let r = self.rank();
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.arrows {
            if a >= r || b >= r || a == b || self.black.contains(&a) || self.black.contains(&b) {
                return Err(Error::Catalog(format!("bad arrow ({}, {})", a + 1, b + 1)));
            }
            if !seen.insert(a) || !seen.insert(b) {
                return Err(Error::Catalog("arrows are not disjoint".into()));
            }
        }
        if self.black.iter().any(|&i| i >= r) {
            return Err(Error::Catalog("black node out of range".into()));
        }
        Ok(())
    }
}

/// One complex symmetric pair `(g, h)` with its real form and data.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricPairRecord {
    pub family: String,
    pub g: CartanType,
    pub g_name: String,
    /// Display name of `h`.
    pub h: String,
    pub h_type: CartanType,
    pub tag: Option<String>,
    pub aliases: Vec<String>,
    pub real_form: String,
    pub satake: SatakeDiagram,
    pub involution: InvolutionSpec,
}

impl SymmetricPairRecord {
    pub fn key(&self) -> String {
        match &self.tag {
            Some(t) => format!("({}, {}:{})", self.g_name, self.h, t),
            None => format!("({}, {})", self.g_name, self.h),
        }
    }

    pub fn h_label(&self) -> String {
        match &self.tag {
            Some(t) => format!("{}:{}", self.h, t),
            None => self.h.clone(),
        }
    }
}

impl fmt::Display for SymmetricPairRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.key(), self.real_form)
    }
}

/// The shipped catalog of irreducible symmetric pairs with rank rules.
#[derive(Debug)]
pub struct Catalog {
    families: Vec<FamilyDef>,
    involutions: HashMap<String, InvolutionDef>,
}

struct Ctx(HashMapContext);

impl Ctx {
    fn new() -> Self {
        Ctx(HashMapContext::new())
    }

    fn set(&mut self, name: &str, v: i64) {
        self.0
            .set_value(name.into(), Value::Int(v))
            .expect("integer variables are always accepted");
    }

    fn int(&self, expr: &str) -> Result<i64> {
        eval_int_with_context(expr, &self.0).map_err(|e| Error::Catalog(format!("`{expr}`: {e}")))
    }

    fn boolean(&self, expr: &str) -> Result<bool> {
        eval_boolean_with_context(expr, &self.0).map_err(|e| Error::Catalog(format!("`{expr}`: {e}")))
    }

    /// Replaces each `{expr}` with its integer value.
    fn template(&self, s: &str) -> Result<String> {
        let mut out = String::new();
        let mut rest = s;
        while let Some(start) = rest.find('{') {
            out.push_str(&rest[..start]);
            let end = rest[start..]
                .find('}')
                .ok_or_else(|| Error::Catalog(format!("unterminated template in `{s}`")))?;
            out.push_str(&self.int(&rest[start + 1..start + end])?.to_string());
            rest = &rest[start + end + 1..];
        }
        out.push_str(rest);
        Ok(out)
    }
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        Self::from_strs(SATAKE_JSON, PAIRS_JSON)
    }

    /// Loads `satake.json` and `pairs.json` from a directory.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(dir.join("satake.json"))?;
        let p = std::fs::read_to_string(dir.join("pairs.json"))?;
        Self::from_strs(&s, &p)
    }

    pub fn from_strs(satake: &str, pairs: &str) -> Result<Self> {
        let cat: CatalogFile = serde_json::from_str(satake)?;
        let inv: PairsFile = serde_json::from_str(pairs)?;
        if cat.version != 1 || inv.version != 1 {
            return Err(Error::Catalog("unsupported catalog version".into()));
        }
        for f in &cat.families {
            if !inv.involutions.contains_key(&f.id) {
                return Err(Error::Catalog(format!("no involution for family {}", f.id)));
            }
        }
        Ok(Catalog {
            families: cat.families,
            involutions: inv.involutions,
        })
    }

    /// All catalog pairs with the given simple `g`.
    pub fn pairs_for(&self, g: &CartanType) -> Result<Vec<SymmetricPairRecord>> {
        if !g.is_simple() {
            return Err(Error::Query(format!("{g} is not simple")));
        }
        let f = g.factors[0];
        let n = f.rank as i64;
        let mut out = Vec::new();
        for fam in self.families.iter().filter(|fam| fam.series == f.series) {
            let mut ctx = Ctx::new();
            ctx.set("n", n);
            if !ctx.boolean(&fam.when)? {
                continue;
            }
            self.expand(fam, g, ctx, 0, &mut out)?;
        }
        Ok(out)
    }

    fn expand(
        &self,
        fam: &FamilyDef,
        g: &CartanType,
        mut ctx: Ctx,
        depth: usize,
        out: &mut Vec<SymmetricPairRecord>,
    ) -> Result<()> {
        if depth < fam.params.len() {
            let p = &fam.params[depth];
            let (lo, hi) = (ctx.int(&p.from)?, ctx.int(&p.to)?);
            for v in lo..=hi {
                let mut c = Ctx(ctx.0.clone());
                c.set(&p.name, v);
                self.expand(fam, g, c, depth + 1, out)?;
            }
            return Ok(());
        }
        for (name, expr) in &fam.lets {
            let v = ctx.int(expr)?;
            ctx.set(name, v);
        }
        out.push(self.instantiate(fam, g, &mut ctx)?);
        Ok(())
    }

    fn instantiate(&self, fam: &FamilyDef, g: &CartanType, ctx: &mut Ctx) -> Result<SymmetricPairRecord> {
        let r = g.rank();
        let h_raw = ctx.template(&fam.h)?;
        let h_type = descriptor_type(&h_raw)?;
        let nodes = |ctx: &mut Ctx, rule: &NodeRule| -> Result<BTreeSet<usize>> {
            match rule {
                NodeRule::List(v) => check_nodes(v, r),
                NodeRule::Expr(e) => {
                    let mut s = BTreeSet::new();
                    for i in 1..=r {
                        ctx.set("i", i as i64);
                        if ctx.boolean(e)? {
                            s.insert(i - 1);
                        }
                    }
                    Ok(s)
                }
            }
        };
        let black = nodes(ctx, &fam.black)?;
        let arrows = match &fam.arrow {
            ArrowRule::List(v) => {
                for &(a, b) in v {
                    check_nodes(&[a, b], r)?;
                }
                v.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
            }
            ArrowRule::Expr(e) => {
                let mut v = Vec::new();
                for i in 1..=r {
                    ctx.set("i", i as i64);
                    let j = ctx.int(e)?;
                    if j < 0 || j as usize > r {
                        return Err(Error::Catalog(format!("{}: arrow target {j} out of range", fam.id)));
                    }
                    if j as usize > i {
                        v.push((i - 1, j as usize - 1));
                    }
                }
                v
            }
        };
        let satake = SatakeDiagram {
            cartan_type: g.clone(),
            black,
            arrows,
        };
        satake.validate()?;

        let inv = &self.involutions[&fam.id];
        let perm: Vec<usize> = match &inv.perm {
            PermRule::List(v) => {
                check_nodes(v, r)?;
                if v.len() != r {
                    return Err(Error::Catalog(format!("{}: permutation has wrong length", fam.id)));
                }
                v.iter().map(|i| i - 1).collect()
            }
            PermRule::Expr(e) => {
                let mut v = Vec::with_capacity(r);
                for i in 1..=r {
                    ctx.set("i", i as i64);
                    let j = ctx.int(e)?;
                    if j < 1 || j as usize > r {
                        return Err(Error::Catalog(format!("{}: permutation image {j} out of range", fam.id)));
                    }
                    v.push(j as usize - 1);
                }
                v
            }
        };
        let negated: Vec<usize> = nodes(ctx, &inv.negate)?.into_iter().collect();
        let involution = InvolutionSpec::new(perm, &negated);

        let mut aliases = Vec::new();
        for a in &fam.aliases {
            let ok = match &a.when {
                Some(w) => ctx.boolean(w)?,
                None => true,
            };
            if ok {
                aliases.push(normalize(&ctx.template(&a.name)?));
            }
        }
        Ok(SymmetricPairRecord {
            family: fam.id.clone(),
            g: g.clone(),
            g_name: display_simple(&g.factors[0]),
            h: canonical_name(&h_raw),
            h_type,
            tag: fam.tag.clone(),
            aliases,
            real_form: ctx.template(&fam.real_form)?,
            satake,
            involution,
        })
    }

    /// Every pair with simple `g` of rank at most `max_rank`.
    pub fn all_pairs(&self, max_rank: usize) -> Result<Vec<SymmetricPairRecord>> {
        let mut out = Vec::new();
        for t in simple_types(max_rank) {
            out.extend(self.pairs_for(&t)?);
        }
        Ok(out)
    }

    /// Finds the pair `(g, h)`. `h` may carry a `:tag` suffix.
    pub fn lookup(&self, g: &str, h: &str) -> Result<SymmetricPairRecord> {
        let gt = ambient_type(g)?;
        if !gt.is_simple() {
            return Err(Error::Query(format!("{g} is not simple")));
        }
        let pairs = self.pairs_for(&gt)?;
        let q = normalize(h);
        if let Some(p) = pairs.iter().find(|p| p.aliases.contains(&q)) {
            return Ok(p.clone());
        }
        let (name, tag) = match q.split_once(':') {
            Some((n, t)) => (n.to_string(), Some(t.to_string())),
            None => (q.clone(), None),
        };
        let unknown = || Error::UnknownPair {
            query: format!("({g}, {h})"),
            g: gt.to_string(),
            nearest: pairs.iter().map(|p| p.h_label()).collect::<Vec<_>>().join(", "),
        };
        let ty = descriptor_type(&name).map_err(|_| unknown())?;
        let cands: Vec<&SymmetricPairRecord> = pairs.iter().filter(|p| p.tag == tag && p.h_type == ty).collect();
        match cands.len() {
            0 => Err(unknown()),
            1 => Ok(cands[0].clone()),
            _ => {
                let canon = canonical_name(&name);
                let exact: Vec<_> = cands.iter().filter(|p| p.h == canon).collect();
                if exact.len() == 1 {
                    Ok((*exact[0]).clone())
                } else {
                    Err(Error::Query(format!(
                        "({g}, {h}) is ambiguous: {}",
                        cands.iter().map(|p| p.h_label()).collect::<Vec<_>>().join(", ")
                    )))
                }
            }
        }
    }
}

fn check_nodes(v: &[usize], r: usize) -> Result<BTreeSet<usize>> {
    v.iter()
        .map(|&i| {
            if i == 0 || i > r {
                Err(Error::Catalog(format!("node {i} out of range 1..={r}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Admissible simple types up to the given rank (C2 omitted as B2).
pub fn simple_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for (s, ok) in [
            (Series::A, true),
            (Series::B, n >= 2),
            (Series::C, n >= 3),
            (Series::D, n >= 4),
            (Series::E, (6..=8).contains(&n)),
            (Series::F, n == 4),
            (Series::G, n == 2),
        ] {
            if ok {
                out.push(CartanType::simple(s, n).expect("admissible"));
            }
        }
    }
    out
}

/// Splits `"(sl4, sp2)"`, `"sl4,sp2"` or `"sl4>sp2"` into its two names.
pub fn parse_pair_key(s: &str) -> Result<(String, String)> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (g, h) = body
        .split_once(',')
        .or_else(|| body.split_once('>'))
        .ok_or_else(|| Error::Parse(s.to_string()))?;
    Ok((g.trim().to_string(), h.trim().to_string()))
}
