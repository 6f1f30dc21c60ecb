//! Algebra presentations: parsing, validation, normalization, ideal
//! components, and the opposite construction.
//!
//! Grammar (UTF-8, line oriented, `#` starts a comment):
//!
//! ```text
//! file       := header line* ;
//! header     := "field" ("Q" | "GF(" prime ")")
//! genline    := "gens" name+
//! relline    := "rel" polynomial
//! polynomial := term (("+"|"-") term)*
//! term       := [integer "*"] word | integer
//! word       := name ("*" name)+ | name
//! ```
//!
//! Generator declaration order fixes the basis order of `V`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::{sparse, Field, FieldSpec, PrimeField, Rationals, SparseVec};
use crate::tensor::{TensorCtx, TensorSubspace, Word};
use crate::verdict::WordVector;
use crate::{Error, Result};

/// A homogeneous noncommutative polynomial: a map from words of a common
/// length to nonzero scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct NcPolynomial<K: Field> {
    pub degree: usize,
    pub terms: BTreeMap<Word, K::Elem>,
}

impl<K: Field> NcPolynomial<K> {
    pub fn to_vec(&self, dim_v: usize) -> SparseVec<K::Elem> {
        let mut pairs: Vec<(usize, K::Elem)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.index(dim_v), c.clone()))
            .collect();
        pairs.sort_by_key(|e| e.0);
        pairs
    }
}

/// Warning emitted by [`normalize`] when a relation space is changed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeWarning {
    pub degree: usize,
    pub dim_before: usize,
    pub dim_after: usize,
    pub message: String,
}

/// A finitely presented connected graded algebra `T(V)/<R>` with relation
/// spaces grouped by degree and kept in canonical RREF.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation<K: Field> {
    pub field: K,
    pub generators: Vec<String>,
    /// Nonzero relation spaces keyed by degree; keys are the set `S`.
    pub relations: BTreeMap<usize, TensorSubspace<K>>,
}

impl<K: Field> Presentation<K> {
    pub fn new(
        field: K,
        generators: Vec<String>,
        relations: BTreeMap<usize, TensorSubspace<K>>,
    ) -> Self {
        let relations = relations.into_iter().filter(|(_, r)| !r.is_zero()).collect();
        Presentation {
            field,
            generators,
            relations,
        }
    }

    pub fn dim_v(&self) -> usize {
        self.generators.len()
    }

    /// The set `S` of degrees carrying nonzero relations.
    pub fn degree_set(&self) -> Vec<usize> {
        self.relations.keys().copied().collect()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.keys().max().copied().unwrap_or(0)
    }

    pub fn relation_space(&self, s: usize) -> Option<&TensorSubspace<K>> {
        self.relations.get(&s)
    }

    pub fn ctx(&self, cap: usize) -> TensorCtx<K> {
        TensorCtx::new(self.field.clone(), self.dim_v(), cap)
    }

    /// Whether every relation space has a basis of single words.
    pub fn is_monomial(&self) -> bool {
        self.relations
            .values()
            .all(|r| r.space.rows().iter().all(|row| row.len() == 1))
    }

    /// The single-degree presentation `T(V)/<R_s>` on the same generators.
    pub fn single_degree(&self, s: usize) -> Presentation<K> {
        let mut relations = BTreeMap::new();
        if let Some(r) = self.relations.get(&s) {
            relations.insert(s, r.clone());
        }
        Presentation {
            field: self.field.clone(),
            generators: self.generators.clone(),
            relations,
        }
    }

    pub fn word_name(&self, w: &Word) -> String {
        if w.letters.is_empty() {
            return "1".to_string();
        }
        w.letters
            .iter()
            .map(|&l| self.generators[l as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Render a vector of `V^(n)` over the word basis.
    pub fn word_vector(&self, degree: usize, v: &SparseVec<K::Elem>) -> WordVector {
        let d = self.dim_v();
        WordVector {
            degree,
            terms: v
                .iter()
                .map(|(i, c)| {
                    (
                        self.word_name(&Word::from_index(*i, d, degree)),
                        self.field.render(c),
                    )
                })
                .collect(),
        }
    }

    /// Render the relations as polynomial strings, per degree.
    pub fn relation_strings(&self) -> BTreeMap<usize, Vec<String>> {
        self.relations
            .iter()
            .map(|(&s, r)| {
                let polys = r
                    .space
                    .rows()
                    .iter()
                    .map(|row| self.word_vector(s, row).to_string())
                    .collect();
                (s, polys)
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Field-independent parse result; instantiate with [`Presentation::from_ast`].
#[derive(Debug, Clone)]
pub struct PresentationAst {
    pub field: FieldSpec,
    pub generators: Vec<String>,
    /// Relations as (line number, list of (coefficient, word)).
    pub relations: Vec<(usize, Vec<(i64, Vec<usize>)>)>,
}

pub fn parse_ast(text: &str) -> Result<PresentationAst> {
    let mut field: Option<FieldSpec> = None;
    let mut generators: Vec<String> = Vec::new();
    let mut gen_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut relations = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let mut parts = line.split_whitespace();
        let keyword = parts.next().unwrap();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate field declaration".into(),
                    });
                }
                let spec = parts.next().ok_or(Error::Parse {
                    line: lineno,
                    msg: "missing field (expected Q or GF(p))".into(),
                })?;
                field = Some(parse_field_spec(spec).map_err(|msg| Error::Parse {
                    line: lineno,
                    msg,
                })?);
            }
            "gens" => {
                if field.is_none() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "field declaration must come first".into(),
                    });
                }
                let mut any = false;
                for name in parts {
                    any = true;
                    if !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                        || name.chars().next().is_some_and(|c| c.is_ascii_digit())
                    {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("invalid generator name '{name}'"),
                        });
                    }
                    if gen_index.contains_key(name) {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("duplicate generator '{name}'"),
                        });
                    }
                    gen_index.insert(name.to_string(), generators.len());
                    generators.push(name.to_string());
                }
                if !any {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "'gens' needs at least one name".into(),
                    });
                }
            }
            "rel" => {
                if field.is_none() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "field declaration must come first".into(),
                    });
                }
                let poly_src = line["rel".len()..].trim();
                let terms = parse_polynomial(poly_src, &gen_index, lineno)?;
                relations.push((lineno, terms));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown directive '{other}'"),
                });
            }
        }
    }

    let field = field.ok_or(Error::Parse {
        line: 1,
        msg: "missing field declaration".into(),
    })?;
    Ok(PresentationAst {
        field,
        generators,
        relations,
    })
}

pub fn parse_field_spec(s: &str) -> std::result::Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|t| t.strip_suffix(')'))
        .or_else(|| s.strip_prefix("GF:"));
    if let Some(p) = inner {
        let p: u64 = p
            .parse()
            .map_err(|_| format!("invalid prime '{p}'"))?;
        if PrimeField::new(p).is_none() {
            return Err(format!("{p} is not a prime below 2^31"));
        }
        return Ok(FieldSpec::PrimeField(p));
    }
    Err(format!("unknown field '{s}' (expected Q or GF(p))"))
}

fn parse_polynomial(
    src: &str,
    gens: &BTreeMap<String, usize>,
    lineno: usize,
) -> Result<Vec<(i64, Vec<usize>)>> {
    if src.is_empty() {
        return Err(Error::Parse {
            line: lineno,
            msg: "empty relation".into(),
        });
    }
    // Split into signed terms.
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = 1i64;
    let mut pending_sign = 1i64;
    for ch in src.chars() {
        match ch {
            '+' | '-' => {
                if current.trim().is_empty() {
                    // leading sign of the next term
                    pending_sign *= if ch == '-' { -1 } else { 1 };
                } else {
                    terms.push((sign, std::mem::take(&mut current)));
                    sign = if ch == '-' { -1 } else { 1 };
                    pending_sign = 1;
                }
            }
            _ => {
                if !current.trim().is_empty() || !ch.is_whitespace() {
                    if current.is_empty() {
                        sign *= pending_sign;
                        pending_sign = 1;
                    }
                    current.push(ch);
                }
            }
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current));
    }

    let mut out = Vec::new();
    for (sgn, term) in terms {
        let factors: Vec<&str> = term.split('*').map(|f| f.trim()).collect();
        let mut coeff: i64 = sgn;
        let mut word: Vec<usize> = Vec::new();
        for (k, f) in factors.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("malformed term '{}'", term.trim()),
                });
            }
            if let Ok(c) = f.parse::<i64>() {
                if k != 0 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("coefficient must lead the term in '{}'", term.trim()),
                    });
                }
                coeff = coeff.checked_mul(c).ok_or(Error::Parse {
                    line: lineno,
                    msg: "coefficient overflow".into(),
                })?;
            } else if let Some(&g) = gens.get(*f) {
                word.push(g);
            } else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown generator '{f}'"),
                });
            }
        }
        if word.is_empty() {
            return Err(Error::Parse {
                line: lineno,
                msg: "bare integer term: every term must contain a word".into(),
            });
        }
        out.push((coeff, word));
    }
    Ok(out)
}

impl<K: Field> Presentation<K> {
    /// Instantiate a parsed file over a concrete field handle. The handle's
    /// spec must match the file header (or deliberately override it).
    pub fn from_ast(field: K, ast: &PresentationAst, cap: usize) -> Result<Presentation<K>> {
        let dim_v = ast.generators.len();
        let ctx = TensorCtx::new(field.clone(), dim_v, cap);
        let mut by_degree: BTreeMap<usize, Vec<SparseVec<K::Elem>>> = BTreeMap::new();
        for (lineno, terms) in &ast.relations {
            let mut degree = None;
            let mut pairs = Vec::new();
            for (c, w) in terms {
                match degree {
                    None => degree = Some(w.len()),
                    Some(d) if d != w.len() => {
                        return Err(Error::Parse {
                            line: *lineno,
                            msg: format!(
                                "non-homogeneous relation: terms of degree {d} and {}",
                                w.len()
                            ),
                        });
                    }
                    _ => {}
                }
                let idx = w.iter().fold(0usize, |acc, &l| acc * dim_v + l);
                pairs.push((idx, field.from_i64(*c)));
            }
            let degree = degree.unwrap();
            if degree < 2 {
                return Err(Error::Parse {
                    line: *lineno,
                    msg: format!("relation of degree {degree} < 2"),
                });
            }
            let row = sparse::collect(&field, pairs);
            if row.is_empty() {
                return Err(Error::Parse {
                    line: *lineno,
                    msg: "relation is zero over the chosen field".into(),
                });
            }
            by_degree.entry(degree).or_default().push(row);
        }
        let mut relations = BTreeMap::new();
        for (s, rows) in by_degree {
            let space = ctx.from_rows(s, rows)?;
            if !space.is_zero() {
                relations.insert(s, space);
            }
        }
        Ok(Presentation {
            field,
            generators: ast.generators.clone(),
            relations,
        })
    }
}

/// Parse a presentation over the rationals (errors if the file asks for GF(p)).
pub fn parse(text: &str, cap: usize) -> Result<Presentation<Rationals>> {
    let ast = parse_ast(text)?;
    if ast.field != FieldSpec::Rationals {
        return Err(Error::Unsupported(format!(
            "file declares field {}; instantiate with the matching field handle",
            ast.field
        )));
    }
    Presentation::from_ast(Rationals, &ast, cap)
}

// ---------------------------------------------------------------------------
// Ideal components, minimality, normalization, opposite
// ---------------------------------------------------------------------------

/// Degree-`n` component of the two-sided ideal generated by the relations:
/// `I_n = sum_s sum_j V^(j) ⊗ R_s ⊗ V^(n-s-j)`.
pub fn ideal_component<K: Field>(
    p: &Presentation<K>,
    n: usize,
    cap: usize,
) -> Result<TensorSubspace<K>> {
    let ctx = p.ctx(cap);
    ideal_components_upto(p, n, &ctx).map(|mut v| v.pop().unwrap())
}

/// All of `I_0..=I_n`, computed by the recursion
/// `I_m = V ⊗ I_{m-1} + I_{m-1} ⊗ V + R_m`.
pub fn ideal_components_upto<K: Field>(
    p: &Presentation<K>,
    n: usize,
    ctx: &TensorCtx<K>,
) -> Result<Vec<TensorSubspace<K>>> {
    let mut out: Vec<TensorSubspace<K>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            out.push(ctx.zero(0)?);
            continue;
        }
        let prev = &out[m - 1];
        let mut rows = Vec::new();
        if !prev.is_zero() {
            let left = ctx.sandwich(1, prev, 0)?;
            let right = ctx.sandwich(0, prev, 1)?;
            rows.extend(left.space.rows().iter().cloned());
            rows.extend(right.space.rows().iter().cloned());
        }
        if let Some(r) = p.relations.get(&m) {
            rows.extend(r.space.rows().iter().cloned());
        }
        out.push(ctx.from_rows(m, rows)?);
    }
    Ok(out)
}

/// Check the minimality condition: for every `s` in `S`, the relation space
/// `R_s` meets the degree-`s` component of the ideal generated by the
/// lower-degree relations trivially. Returns a witness vector otherwise.
pub fn check_minimality<K: Field>(
    p: &Presentation<K>,
    cap: usize,
) -> Result<(bool, Option<(usize, WordVector)>)> {
    let ctx = p.ctx(cap);
    let degrees = p.degree_set();
    let Some(&max_s) = degrees.last() else {
        return Ok((true, None));
    };
    let ideals = ideal_components_upto(p, max_s.saturating_sub(1), &ctx)?;
    for &s in &degrees {
        let r = &p.relations[&s];
        let lower = &ideals[s - 1];
        if lower.is_zero() {
            continue;
        }
        // Degree-s part of the ideal generated by relations of degree < s.
        let from_lower = ctx
            .sandwich(1, lower, 0)?
            .space
            .sum(&ctx.sandwich(0, lower, 1)?.space)?;
        let meet = r.space.intersect(&from_lower)?;
        if !meet.is_zero() {
            let witness = p.word_vector(s, &meet.rows()[0]);
            return Ok((false, Some((s, witness))));
        }
    }
    Ok((true, None))
}

/// Replace each relation space by a complement of the lower-degree ideal
/// contribution inside it, ascending by degree. The presented algebra is
/// unchanged; the result satisfies the minimality condition.
pub fn normalize<K: Field>(
    p: &Presentation<K>,
    cap: usize,
) -> Result<(Presentation<K>, Vec<NormalizeWarning>)> {
    let ctx = p.ctx(cap);
    let mut warnings = Vec::new();
    let mut normalized: BTreeMap<usize, TensorSubspace<K>> = BTreeMap::new();
    let degrees = p.degree_set();
    let Some(&max_s) = degrees.last() else {
        return Ok((p.clone(), warnings));
    };

    // Ideal components of the already-normalized lower part, grown as we go.
    let tmp = Presentation::new(p.field.clone(), p.generators.clone(), BTreeMap::new());
    let mut lower = tmp;
    for &s in &degrees {
        let given = &p.relations[&s];
        let ideals = ideal_components_upto(&lower, s - 1, &ctx)?;
        let prev = &ideals[s - 1];
        let reduced = if prev.is_zero() {
            given.clone()
        } else {
            let from_lower = ctx
                .sandwich(1, prev, 0)?
                .space
                .sum(&ctx.sandwich(0, prev, 1)?.space)?;
            let redundant = given.space.intersect(&from_lower)?;
            let kept = given.space.complement_of(&redundant)?;
            TensorSubspace {
                degree: s,
                dim_v: p.dim_v(),
                space: kept,
            }
        };
        if reduced.dim() != given.dim() {
            warnings.push(NormalizeWarning {
                degree: s,
                dim_before: given.dim(),
                dim_after: reduced.dim(),
                message: format!(
                    "degree-{s} relations reduced from dim {} to {}: the dropped part lies in the ideal generated by lower degrees",
                    given.dim(),
                    reduced.dim()
                ),
            });
        }
        if !reduced.is_zero() {
            normalized.insert(s, reduced);
        }
        lower = Presentation::new(p.field.clone(), p.generators.clone(), normalized.clone());
        let _ = max_s;
    }
    Ok((
        Presentation::new(p.field.clone(), p.generators.clone(), normalized),
        warnings,
    ))
}

/// The opposite presentation: every relation word reversed.
pub fn opposite<K: Field>(p: &Presentation<K>, cap: usize) -> Result<Presentation<K>> {
    let ctx = p.ctx(cap);
    let d = p.dim_v();
    let mut relations = BTreeMap::new();
    for (&s, r) in &p.relations {
        let rows = r
            .space
            .rows()
            .iter()
            .map(|row| {
                let pairs = row
                    .iter()
                    .map(|(i, c)| {
                        let w = Word::from_index(*i, d, s);
                        (w.reversed().index(d), c.clone())
                    })
                    .collect();
                sparse::collect(&p.field, pairs)
            })
            .collect();
        relations.insert(s, ctx.from_rows(s, rows)?);
    }
    Ok(Presentation {
        field: p.field.clone(),
        generators: p.generators.clone(),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::DEFAULT_AMBIENT_CAP;

    const CAP: usize = DEFAULT_AMBIENT_CAP;

    fn pres(text: &str) -> Presentation<Rationals> {
        parse(text, CAP).unwrap()
    }

    #[test]
    fn parse_two_degree_example() {
        let p = pres("field Q\ngens x y z\nrel x*z\nrel y*y*x\n");
        assert_eq!(p.degree_set(), vec![2, 3]);
        assert_eq!(p.relations[&2].dim(), 1);
        assert_eq!(p.relations[&3].dim(), 1);
        assert!(p.is_monomial());
    }

    #[test]
    fn parse_single_generator() {
        let p = pres("field Q\ngens x\nrel x*x\n");
        assert_eq!(p.degree_set(), vec![2]);
        assert_eq!(p.relations[&2].dim(), 1);
    }

    #[test]
    fn parse_rejects_mixed_degrees() {
        let err = parse("field Q\ngens x y\nrel x*y - y*x + x\n", CAP).unwrap_err();
        match err {
            Error::Parse { msg, .. } => assert!(msg.contains("non-homogeneous"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_degree_one_and_bare_ints() {
        assert!(parse("field Q\ngens x\nrel x\n", CAP).is_err());
        assert!(parse("field Q\ngens x\nrel 3\n", CAP).is_err());
        assert!(parse("field Q\ngens x\nrel x*w\n", CAP).is_err());
        assert!(parse("field GF(4)\ngens x\nrel x*x\n", CAP).is_err());
    }

    #[test]
    fn parse_coefficients_and_comments() {
        let p = pres("# a comment\nfield Q\ngens x y\nrel 2*x*y - 3*y*x # trailing\n");
        assert_eq!(p.relations[&2].dim(), 1);
        let row = &p.relations[&2].space.rows()[0];
        // normalized leading coefficient 1: xy - 3/2 yx
        assert_eq!(row.len(), 2);
    }

    #[test]
    fn ideal_components_examples() {
        // <x^2> in k<x>, n = 3 -> span{x^3}
        let p = pres("field Q\ngens x\nrel x*x\n");
        let i3 = ideal_component(&p, 3, CAP).unwrap();
        assert_eq!(i3.dim(), 1);
        // <xz> in k<x,z>, n = 3 -> {xxz, zxz, xzx, xzz}, dim 4
        let p = pres("field Q\ngens x z\nrel x*z\n");
        let i3 = ideal_component(&p, 3, CAP).unwrap();
        assert_eq!(i3.dim(), 4);
        // n below min S -> zero
        let i1 = ideal_component(&p, 1, CAP).unwrap();
        assert!(i1.is_zero());
    }

    #[test]
    fn minimality_examples() {
        let p = pres("field Q\ngens x y z\nrel x*z\nrel y*y*x\n");
        assert!(check_minimality(&p, CAP).unwrap().0);

        let p = pres("field Q\ngens x\nrel x*x\nrel x*x*x\n");
        let (ok, witness) = check_minimality(&p, CAP).unwrap();
        assert!(!ok);
        let (s, w) = witness.unwrap();
        assert_eq!(s, 3);
        assert_eq!(w.to_string(), "x*x*x");

        let p = Presentation::new(Rationals, vec!["x".into()], BTreeMap::new());
        assert!(check_minimality(&p, CAP).unwrap().0);
    }

    #[test]
    fn normalize_drops_redundant_degree() {
        let p = pres("field Q\ngens x\nrel x*x\nrel x*x*x\n");
        let (q, warnings) = normalize(&p, CAP).unwrap();
        assert_eq!(q.degree_set(), vec![2]);
        assert_eq!(warnings.len(), 1);
        assert_eq!(warnings[0].degree, 3);
        assert!(check_minimality(&q, CAP).unwrap().0);
        // idempotent
        let (q2, w2) = normalize(&q, CAP).unwrap();
        assert_eq!(q2, q);
        assert!(w2.is_empty());
    }

    #[test]
    fn normalize_keeps_minimal_input() {
        let p = pres("field Q\ngens x y z\nrel x*z\nrel y*y*x\n");
        let (q, warnings) = normalize(&p, CAP).unwrap();
        assert_eq!(q, p);
        assert!(warnings.is_empty());
    }

    #[test]
    fn normalize_fully_redundant_degree_three_span() {
        // xyy + yxy lies in the ideal generated by xy, so the whole degree-3
        // space is redundant and the normalized presentation is <xy> alone.
        let p = pres("field Q\ngens x y\nrel x*y\nrel x*y*y + y*x*y\n");
        let (q, warnings) = normalize(&p, CAP).unwrap();
        assert_eq!(q.degree_set(), vec![2]);
        assert_eq!(warnings.len(), 1);
        assert!(check_minimality(&q, CAP).unwrap().0);
    }

    #[test]
    fn opposite_examples() {
        let p = pres("field Q\ngens x\nrel x*x\n");
        assert_eq!(opposite(&p, CAP).unwrap(), p);

        let p = pres("field Q\ngens x z\nrel x*z\n");
        let q = pres("field Q\ngens x z\nrel z*x\n");
        assert_eq!(opposite(&p, CAP).unwrap(), q);

        let p = pres("field Q\ngens x y\nrel y*y*x\n");
        let q = pres("field Q\ngens x y\nrel x*y*y\n");
        assert_eq!(opposite(&p, CAP).unwrap(), q);
        // involution
        assert_eq!(opposite(&opposite(&p, CAP).unwrap(), CAP).unwrap(), p);
    }

    #[test]
    fn word_vector_rendering() {
        let p = pres("field Q\ngens x y\nrel 2*x*y - y*x\n");
        let row = &p.relations[&2].space.rows()[0];
        let wv = p.word_vector(2, row);
        assert_eq!(wv.to_string(), "x*y + (-1/2)*y*x");
    }
}
