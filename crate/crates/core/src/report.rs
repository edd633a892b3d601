//! Analysis report for one code description, rendered as text or as
//! `key=value` lines that [`parse_machine`] reads back.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matrix::Matrix;
use crate::mt::{Claim, MtSpec, NonCoprimePair, Verdict, VerdictWitness};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    NotRequested,
    /// The code is zero.
    Undefined,
    Exact(usize),
    /// `q^k` exceeds the cap and the parity-check test shows `d >= 3`.
    OverCap { required: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimRow {
    pub key: String,
    pub hypothesis: bool,
    pub conclusion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailingBlock {
    pub block: usize,
    pub self_reciprocal: bool,
    pub common: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub spec: MtSpec,
    pub dimension: usize,
    pub rank_dimension: usize,
    pub divisor: Poly,
    pub block_generators: Vec<Poly>,
    pub quotients: Vec<Poly>,
    pub coprimality: bool,
    pub coprimality_witness: Option<NonCoprimePair>,
    pub verdict: Verdict,
    pub failing_block: Option<FailingBlock>,
    pub exact_lcd: bool,
    pub gram_nonsingular: bool,
    pub hull_dimension: usize,
    pub hull: Matrix,
    pub self_orthogonal: bool,
    pub dual_containing: bool,
    pub min_distance: Distance,
    pub legacy: bool,
    pub claims: Vec<ClaimRow>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Compute the minimum distance with this enumeration cap.
    pub distance_cap: Option<u128>,
}

fn distance_of(code: &LinearCode, cap: Option<u128>) -> Result<Distance> {
    let Some(cap) = cap else {
        return Ok(Distance::NotRequested);
    };
    match code.min_distance_or_small(cap) {
        Ok(Some(d)) => Ok(Distance::Exact(d)),
        Ok(None) => Ok(Distance::Undefined),
        Err(Error::CapExceeded { required, .. }) => Ok(Distance::OverCap { required }),
        Err(e) => Err(e),
    }
}

impl Report {
    /// Runs every analysis; fails if the dimension formula and the rank
    /// disagree or the two LCD routes disagree.
    pub fn build(spec: &MtSpec, opts: &ReportOptions) -> Result<Report> {
        let code = spec.expand();
        let df = spec.dimension_formula()?;
        let cop = spec.coprimality();
        let v = spec.lcd_verdict();
        let failing_block = match v.witness {
            VerdictWitness::FailingBlock { block, self_reciprocal, common } => {
                Some(FailingBlock { block, self_reciprocal, common })
            }
            _ => None,
        };
        let hyp = spec.refuted_hypotheses()?;
        let claims = hyp
            .checks
            .iter()
            .map(|c| ClaimRow { key: c.claim.key().to_string(), hypothesis: c.hypothesis, conclusion: c.conclusion })
            .collect();
        let hull = code.hull();
        Ok(Report {
            spec: spec.clone(),
            dimension: df.dimension,
            rank_dimension: df.rank,
            divisor: df.divisor,
            block_generators: (0..spec.ell()).map(|i| spec.block_gen_poly(i)).collect(),
            quotients: cop.quotients,
            coprimality: cop.witness.is_none(),
            coprimality_witness: cop.witness,
            verdict: v.verdict,
            failing_block,
            exact_lcd: code.is_lcd()?,
            gram_nonsingular: code.basis().gram().is_nonsingular()?,
            hull_dimension: hull.dimension(),
            hull: hull.basis().clone(),
            self_orthogonal: code.is_self_orthogonal(),
            dual_containing: code.is_dual_containing(),
            min_distance: distance_of(&code, opts.distance_cap)?,
            legacy: spec.legacy_lcd_condition(),
            claims,
        })
    }

    fn field(&self) -> &Field {
        self.spec.field()
    }

    fn elems(&self, v: &[Elem]) -> String {
        v.iter().map(|&e| self.field().format_elem(e)).collect::<Vec<_>>().join(" ")
    }

    pub fn render_text(&self) -> String {
        let f = self.field();
        let s = &self.spec;
        let mut o = String::new();
        let _ = writeln!(
            o,
            "field      GF({}^{}) modulus {:?}",
            f.characteristic(),
            f.degree(),
            f.modulus()
        );
        let _ = writeln!(o, "lengths    {:?} (n = {})", s.lengths(), s.n());
        let _ = writeln!(o, "shifts     {}", self.elems(s.shifts()));
        for (k, g) in s.generators().iter().enumerate() {
            let parts: Vec<String> = g.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(o, "generator  {}: ({})", k + 1, parts.join(", "));
        }
        let _ = writeln!(o);
        let _ = writeln!(o, "dimension  {} (formula), {} (rank)", self.dimension, self.rank_dimension);
        let _ = writeln!(o, "divisor    {}", self.divisor);
        for i in 0..s.ell() {
            let _ = writeln!(o, "block {}    g = {}", i + 1, self.block_generators[i]);
            let _ = writeln!(o, "           q = {}", self.quotients[i]);
        }
        match &self.coprimality_witness {
            None => {
                let _ = writeln!(o, "quotients  pairwise coprime");
            }
            Some(w) => {
                let _ = writeln!(o, "quotients  {} and {} share {}", w.i, w.j, w.common);
            }
        }
        let _ = write!(o, "verdict    {}", self.verdict);
        if let Some(b) = &self.failing_block {
            let _ = write!(
                o,
                " (block {}: self-reciprocal {}, gcd with quotient {})",
                b.block, b.self_reciprocal, b.common
            );
        }
        let _ = writeln!(o);
        let _ = writeln!(o, "exact LCD  {} (GG^T nonsingular {})", self.exact_lcd, self.gram_nonsingular);
        let _ = writeln!(o, "hull       dimension {}", self.hull_dimension);
        for r in 0..self.hull.rows() {
            let _ = writeln!(o, "           [{}]", self.elems(self.hull.row(r)));
        }
        let _ = writeln!(o, "self-orthogonal {}, dual-containing {}", self.self_orthogonal, self.dual_containing);
        match self.min_distance {
            Distance::NotRequested => {}
            Distance::Undefined => {
                let _ = writeln!(o, "distance   undefined (zero code)");
            }
            Distance::Exact(d) => {
                let _ = writeln!(o, "distance   {d}");
            }
            Distance::OverCap { required } => {
                let _ = writeln!(o, "distance   >= 3 ({required} codewords exceed the cap)");
            }
        }
        let _ = writeln!(o, "legacy condition (coprime binomials, no involutive shift) {}", self.legacy);
        let _ = writeln!(o);
        let _ = writeln!(o, "{:<30} {:<10} {:<10} refuted", "claim", "hypothesis", "conclusion");
        for c in &self.claims {
            let _ = writeln!(
                o,
                "{:<30} {:<10} {:<10} {}",
                c.key,
                c.hypothesis,
                c.conclusion,
                c.hypothesis && !c.conclusion
            );
        }
        o
    }

    pub fn render_machine(&self) -> String {
        let f = self.field();
        let s = &self.spec;
        let mut o = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(o, "{k}={v}");
        };
        let join = |v: Vec<String>, sep: &str| v.join(sep);
        kv("field.p", f.characteristic().to_string());
        kv("field.degree", f.degree().to_string());
        kv("field.modulus", join(f.modulus().iter().map(u32::to_string).collect(), ","));
        kv("lengths", join(s.lengths().iter().map(usize::to_string).collect(), ","));
        kv("shifts", join(s.shifts().iter().map(|&e| f.format_elem(e)).collect(), ","));
        kv("rho", s.rho().to_string());
        for (k, g) in s.generators().iter().enumerate() {
            kv(&format!("generator_{}", k + 1), join(g.iter().map(Poly::to_string).collect(), ";"));
        }
        kv("n", s.n().to_string());
        kv("dim", self.dimension.to_string());
        kv("dim_rank", self.rank_dimension.to_string());
        kv("divisor", self.divisor.to_string());
        for i in 0..s.ell() {
            kv(&format!("g_{}", i + 1), self.block_generators[i].to_string());
            kv(&format!("q_{}", i + 1), self.quotients[i].to_string());
        }
        kv("coprime", self.coprimality.to_string());
        if let Some(w) = &self.coprimality_witness {
            kv("coprime_witness", format!("{},{},{}", w.i, w.j, w.common));
        }
        kv("verdict", self.verdict.to_string());
        if let Some(b) = &self.failing_block {
            kv("verdict_block", format!("{},{},{}", b.block, b.self_reciprocal, b.common));
        }
        kv("exact_lcd", self.exact_lcd.to_string());
        kv("gram_nonsingular", self.gram_nonsingular.to_string());
        kv("hull_dim", self.hull_dimension.to_string());
        for r in 0..self.hull.rows() {
            kv(&format!("hull_{}", r + 1), self.elems(self.hull.row(r)));
        }
        kv("self_orthogonal", self.self_orthogonal.to_string());
        kv("dual_containing", self.dual_containing.to_string());
        match self.min_distance {
            Distance::NotRequested => {}
            Distance::Undefined => kv("min_distance", "undefined".into()),
            Distance::Exact(d) => kv("min_distance", d.to_string()),
            Distance::OverCap { required } => kv("min_distance", format!("over_cap:{required}")),
        }
        kv("legacy", self.legacy.to_string());
        for c in &self.claims {
            kv(&format!("claim.{}", c.key), format!("{},{}", c.hypothesis, c.conclusion));
        }
        o
    }
}

struct Fields<'a> {
    map: BTreeMap<&'a str, (usize, &'a str)>,
}

impl<'a> Fields<'a> {
    fn err(line: usize, message: String) -> Error {
        Error::Syntax { line, column: 1, message }
    }

    fn get(&self, key: &str) -> Result<(usize, &'a str)> {
        self.map.get(key).copied().ok_or_else(|| Self::err(0, format!("missing key {key}")))
    }

    fn opt(&self, key: &str) -> Option<(usize, &'a str)> {
        self.map.get(key).copied()
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let (line, v) = self.get(key)?;
        v.parse().map_err(|_| Self::err(line, format!("{key}: expected a number, got {v:?}")))
    }

    fn flag(&self, key: &str) -> Result<bool> {
        let (line, v) = self.get(key)?;
        parse_bool(v).ok_or_else(|| Self::err(line, format!("{key}: expected true or false")))
    }

    fn poly(&self, f: &Field, key: &str) -> Result<Poly> {
        let (line, v) = self.get(key)?;
        Poly::parse(f, v).map_err(|e| Self::err(line, format!("{key}: {e}")))
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

fn split_list<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<Vec<T>> {
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| Fields::err(line, format!("{key}: bad entry {x:?}"))))
        .collect()
}

/// Reads the output of [`Report::render_machine`] back into a report.
pub fn parse_machine(text: &str) -> Result<Report> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let (k, v) = raw
            .split_once('=')
            .ok_or_else(|| Fields::err(i + 1, format!("expected key=value, got {raw:?}")))?;
        if map.insert(k, (i + 1, v)).is_some() {
            return Err(Fields::err(i + 1, format!("duplicate key {k}")));
        }
    }
    let fs = Fields { map };

    let (ml, mv) = fs.get("field.modulus")?;
    let field = Field::new(fs.num("field.p")?, fs.num("field.degree")?, &split_list::<u32>(ml, "field.modulus", mv)?)?;
    let (ll, lv) = fs.get("lengths")?;
    let lengths = split_list::<usize>(ll, "lengths", lv)?;
    let (_, sv) = fs.get("shifts")?;
    let shifts = sv.split(',').map(|s| field.parse_elem(s)).collect::<Result<Vec<Elem>>>()?;
    let rho: usize = fs.num("rho")?;
    let gens = (1..=rho)
        .map(|k| {
            let (_, v) = fs.get(&format!("generator_{k}"))?;
            v.split(';').map(|p| Poly::parse(&field, p)).collect::<Result<Vec<Poly>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = MtSpec::new(&field, lengths, shifts, gens)?;
    let ell = spec.ell();

    let block_generators = (1..=ell).map(|i| fs.poly(&field, &format!("g_{i}"))).collect::<Result<Vec<_>>>()?;
    let quotients = (1..=ell).map(|i| fs.poly(&field, &format!("q_{i}"))).collect::<Result<Vec<_>>>()?;
    let coprimality_witness = match fs.opt("coprime_witness") {
        None => None,
        Some((line, v)) => {
            let mut parts = v.splitn(3, ',');
            let mut idx = || -> Result<usize> {
                parts
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Fields::err(line, "coprime_witness: bad index".into()))
            };
            let (i, j) = (idx()?, idx()?);
            let common = Poly::parse(&field, parts.next().unwrap_or(""))?;
            Some(NonCoprimePair { i, j, common })
        }
    };
    let (vl, vv) = fs.get("verdict")?;
    let verdict = match vv {
        "LCD" => Verdict::Lcd,
        "NotLCD" => Verdict::NotLcd,
        "Inconclusive" => Verdict::Inconclusive,
        other => return Err(Fields::err(vl, format!("verdict: unknown value {other:?}"))),
    };
    let failing_block = match fs.opt("verdict_block") {
        None => None,
        Some((line, v)) => {
            let mut parts = v.splitn(3, ',');
            let block = parts.next().and_then(|x| x.parse().ok());
            let sr = parts.next().and_then(parse_bool);
            let (Some(block), Some(self_reciprocal)) = (block, sr) else {
                return Err(Fields::err(line, "verdict_block: malformed".into()));
            };
            let common = Poly::parse(&field, parts.next().unwrap_or(""))?;
            Some(FailingBlock { block, self_reciprocal, common })
        }
    };
    let hull_dimension: usize = fs.num("hull_dim")?;
    let hull_rows = (1..=hull_dimension)
        .map(|r| {
            let (_, v) = fs.get(&format!("hull_{r}"))?;
            v.split_whitespace().map(|e| field.parse_elem(e)).collect::<Result<Vec<Elem>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let hull = Matrix::from_rows(&field, spec.n(), &hull_rows)?;
    let min_distance = match fs.opt("min_distance") {
        None => Distance::NotRequested,
        Some((_, "undefined")) => Distance::Undefined,
        Some((line, v)) => match v.strip_prefix("over_cap:") {
            Some(r) => Distance::OverCap {
                required: r.parse().map_err(|_| Fields::err(line, "min_distance: bad count".into()))?,
            },
            None => Distance::Exact(v.parse().map_err(|_| Fields::err(line, "min_distance: bad value".into()))?),
        },
    };
    let claims = [
        Claim::SmallDimensionImpliesLcd,
        Claim::DimensionAtMinLength,
        Claim::DualDimensionAtMinLength,
        Claim::NontrivialProjections,
    ]
    .iter()
    .map(|c| {
        let key = format!("claim.{}", c.key());
        let (line, v) = fs.get(&key)?;
        let (h, k) = v.split_once(',').ok_or_else(|| Fields::err(line, format!("{key}: malformed")))?;
        match (parse_bool(h), parse_bool(k)) {
            (Some(hypothesis), Some(conclusion)) => Ok(ClaimRow { key: c.key().to_string(), hypothesis, conclusion }),
            _ => Err(Fields::err(line, format!("{key}: malformed"))),
        }
    })
    .collect::<Result<Vec<_>>>()?;

    Ok(Report {
        dimension: fs.num("dim")?,
        rank_dimension: fs.num("dim_rank")?,
        divisor: fs.poly(&field, "divisor")?,
        block_generators,
        quotients,
        coprimality: fs.flag("coprime")?,
        coprimality_witness,
        verdict,
        failing_block,
        exact_lcd: fs.flag("exact_lcd")?,
        gram_nonsingular: fs.flag("gram_nonsingular")?,
        hull_dimension,
        hull,
        self_orthogonal: fs.flag("self_orthogonal")?,
        dual_containing: fs.flag("dual_containing")?,
        min_distance,
        legacy: fs.flag("legacy")?,
        claims,
        spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::FIXTURES;

    #[test]
    fn machine_round_trip_on_every_fixture() {
        for fx in &FIXTURES {
            let spec = fx.spec().unwrap();
            for opts in [ReportOptions::default(), ReportOptions { distance_cap: Some(10_000) }] {
                let r = Report::build(&spec, &opts).unwrap();
                let back = parse_machine(&r.render_machine()).unwrap();
                assert_eq!(back, r, "{}", fx.name);
            }
        }
    }

    #[test]
    fn failing_block_round_trips() {
        // x^3 - 1 = (x - 1)^3 over F_3, so g = x - 1 shares a factor with its quotient
        let f = Field::prime(3).unwrap();
        let spec = MtSpec::new(&f, vec![3], vec![Elem::ONE], vec![vec![Poly::parse(&f, "x + 2").unwrap()]]).unwrap();
        let r = Report::build(&spec, &ReportOptions { distance_cap: Some(100) }).unwrap();
        assert_eq!(r.verdict, Verdict::NotLcd);
        assert!(r.failing_block.is_some());
        assert_eq!(parse_machine(&r.render_machine()).unwrap(), r);
    }

    #[test]
    fn text_report_mentions_key_facts() {
        let spec = crate::fixtures::find("f4-coprime-quotients").unwrap().spec().unwrap();
        let t = Report::build(&spec, &ReportOptions { distance_cap: Some(1 << 20) }).unwrap().render_text();
        assert!(t.contains("verdict    LCD"));
        assert!(t.contains("dimension  5 (formula), 5 (rank)"));
        assert!(t.contains("distance   3"));
    }

    #[test]
    fn malformed_machine_input() {
        assert!(matches!(parse_machine("field.p=3\nnonsense"), Err(Error::Syntax { line: 2, .. })));
        assert!(parse_machine("field.p=3").is_err());
    }
}
