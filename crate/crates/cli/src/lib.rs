//! Command-line front end: argument parsing, dispatch and report formatting.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symvoa::fock::{self, Monomial, State, Weight};
use symvoa::griess::{jordan_verify, GriessTable};
use symvoa::liealg::{bracket_r, canonicalize, parse_raw_generator, LieElement};
use symvoa::scalar::RParam;
use symvoa::singular::{check_sweep, det_power_state, is_singular, singular_r, sweep, verify_det_lemmas};
use symvoa::suite::{self, Check, SuiteConfig};
use symvoa::virops::{self, Window};

const DEGREE_GUARD: u64 = 10;

#[derive(Parser, Debug)]
#[command(name = "symvoa", version, about = "Exact computations in L_r, M_r and the VOA V_J")]
pub struct Cli {
    #[command(flatten)]
    pub cfg: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Number of Heisenberg indices.
    #[arg(long, global = true, default_value_t = 2, env = "SYMVOA_D")]
    pub d: u32,
    /// Value of r: a rational literal or "generic".
    #[arg(long, global = true, env = "SYMVOA_R")]
    pub r: Option<String>,
    #[arg(long, global = true, default_value_t = 6, env = "SYMVOA_MAX_DEGREE")]
    pub max_degree: u64,
    /// Allow --max-degree above the guard.
    #[arg(long, global = true, env = "SYMVOA_ALLOW_LARGE_DEGREE")]
    pub allow_large_degree: bool,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text, env = "SYMVOA_OUTPUT")]
    pub output: Output,
    #[arg(long, global = true, default_value_t = 0, env = "SYMVOA_SEED")]
    pub seed: u64,
    /// Worker threads for the sweep (0 = all cores).
    #[arg(long, global = true, default_value_t = 0, env = "SYMVOA_WORKERS")]
    pub workers: usize,
    /// Summation window "lo,hi" for L operators and vertex modes.
    #[arg(long, global = true, env = "SYMVOA_WINDOW_OVERRIDE", allow_hyphen_values = true)]
    pub window_override: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Deformed bracket of two generator literals.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Action of a generator on a monomial state.
    Act {
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Monomial literal such as "v[1,1](-1,-1)^2", "1", or a JSON state.
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Apply L^ij(m).
    #[command(name = "act-L", alias = "act-l")]
    ActL {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Closed-form mode v^ij(m,n)_l of the vertex operator, i != j.
    VertexMode {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(allow_hyphen_values = true)]
        state: String,
        /// Also compute the recursive construction and compare.
        #[arg(long)]
        check: bool,
    },
    /// PBW basis of a weight space, e.g. "2L[1,-1]+L[1,-2]".
    WeightBasis {
        weight: String,
        /// Only monomials in v^11 generators.
        #[arg(long)]
        restricted: bool,
    },
    /// Is (det V_p)^nu 1 singular? r defaults to 1 - 2nu + p.
    SingularCheck {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        nu: u32,
        /// Test all raising v^ij, not only index 1.
        #[arg(long)]
        full_algebra: bool,
        /// Mode bound for raising generators (default: the state degree).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Kernel dimensions of raising operators on restricted weight spaces.
    SingularSweep {
        #[arg(long, allow_hyphen_values = true, default_value_t = -2)]
        rmin: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 3)]
        rmax: i64,
        /// Extra r values, comma separated ("1/2,-1/2,generic").
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        extra: Vec<String>,
    },
    /// Determinant-vector identities for det V_p.
    VerifyDet {
        #[arg(long, default_value_t = 3)]
        p: usize,
    },
    /// Degree-two structure constants and the Jordan verdict.
    GriessTable,
    /// Virasoro relation with central charge d r.
    VirasoroCheck {
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Every verification, as a pass/fail matrix.
    PaperSuite {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Run only these criteria (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<symvoa::Error> for Failure {
    fn from(e: symvoa::Error) -> Self {
        match e {
            symvoa::Error::Parse(_)
            | symvoa::Error::IndexOutOfRange { .. }
            | symvoa::Error::InvalidArgument(_)
            | symvoa::Error::DiagonalVertexMode(_)
            | symvoa::Error::NonNegativeMode { .. }
            | symvoa::Error::ZeroState
            | symvoa::Error::Inhomogeneous => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

/// Report text plus whether every verification in it passed.
pub struct Report {
    pub body: String,
    pub passed: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, passed: true }
    }
}

fn parse_r(cfg: &RunConfig) -> Result<Option<RParam>, Failure> {
    cfg.r.as_deref().map(|s| s.parse::<RParam>().map_err(|e| Failure::Usage(format!("--r: {e}")))).transpose()
}

fn parse_element(s: &str, d: u32) -> Result<LieElement, Failure> {
    let (i, j, m, n) = parse_raw_generator(s)?;
    Ok(canonicalize(i, j, m, n, d)?)
}

fn parse_state(s: &str, d: u32) -> Result<State, Failure> {
    let s = s.trim();
    let u = if s.starts_with('[') {
        let v: Value = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("state JSON: {e}")))?;
        State::from_json(&v)?
    } else {
        State::monomial(s.parse::<Monomial>()?)
    };
    if u.max_index() > d {
        return Err(Failure::Usage(format!("state uses index {} > d = {d}", u.max_index())));
    }
    Ok(u)
}

fn parse_window(cfg: &RunConfig) -> Result<Option<Window>, Failure> {
    let Some(s) = cfg.window_override.as_deref() else {
        return Ok(None);
    };
    let bad = || Failure::Usage(format!("--window-override expects \"lo,hi\", got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b.trim().parse().map_err(|_| bad())?;
    Ok(Some((lo, hi)))
}

fn check_index(i: u32, d: u32) -> Result<(), Failure> {
    if i == 0 || i > d {
        Err(Failure::Usage(format!("index {i} out of range 1..={d}")))
    } else {
        Ok(())
    }
}

fn state_report(u: &State, output: Output) -> String {
    match output {
        Output::Json => format!("{}\n", serde_json::to_string_pretty(&json!({ "state": u.to_json(), "text": u.to_string() })).unwrap()),
        _ => format!("{u}\n"),
    }
}

fn checks_report(checks: &[Check], output: Output) -> Report {
    let passed = checks.iter().all(|c| c.passed);
    let body = match output {
        Output::Json => format!("{}\n", serde_json::to_string_pretty(&json!({ "passed": passed, "checks": checks })).unwrap()),
        _ => {
            let mut s = String::new();
            for c in checks {
                let _ = write!(s, "{}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                if !c.passed {
                    let _ = write!(s, "\n      witness: {}", c.detail);
                }
                s.push('\n');
            }
            s
        }
    };
    Report { body, passed }
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let cfg = &cli.cfg;
    if cfg.d == 0 {
        return Err(Failure::Usage("--d must be at least 1".into()));
    }
    if cfg.max_degree == 0 {
        return Err(Failure::Usage("--max-degree must be at least 1".into()));
    }
    if cfg.max_degree > DEGREE_GUARD && !cfg.allow_large_degree {
        return Err(Failure::Usage(format!(
            "--max-degree {} exceeds the guard of {DEGREE_GUARD}; pass --allow-large-degree to proceed",
            cfg.max_degree
        )));
    }
    let r = parse_r(cfg)?;
    let window = parse_window(cfg)?;
    match &cli.command {
        Command::Bracket { x, y } => {
            let (x, y) = (parse_element(x, cfg.d)?, parse_element(y, cfg.d)?);
            let z = bracket_r(&x, &y).specialize(r.as_ref().unwrap_or(&RParam::Generic));
            Ok(Report::ok(match cfg.output {
                Output::Json => {
                    let terms: Vec<Value> =
                        z.terms().map(|(g, c)| json!({ "generator": g.to_string(), "coeff": c.to_string() })).collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({ "bracket": z.to_string(), "terms": terms, "constant": z.constant.to_string() }))
                            .unwrap()
                    )
                }
                _ => format!("{z}\n"),
            }))
        }
        Command::Act { x, state } => {
            let x = parse_element(x, cfg.d)?;
            let u = parse_state(state, cfg.d)?;
            let out = fock::act(&x, &u).specialize(r.as_ref().unwrap_or(&RParam::Generic));
            Ok(Report::ok(state_report(&out, cfg.output)))
        }
        Command::ActL { i, j, m, state } => {
            check_index(*i, cfg.d)?;
            check_index(*j, cfg.d)?;
            let u = parse_state(state, cfg.d)?;
            let out = match window {
                Some(w) => virops::act_l_window(*i, *j, *m, &u, w),
                None => virops::act_l(*i, *j, *m, &u),
            };
            Ok(Report::ok(state_report(&out.specialize(r.as_ref().unwrap_or(&RParam::Generic)), cfg.output)))
        }
        Command::VertexMode { i, j, m, n, l, state, check } => {
            check_index(*i, cfg.d)?;
            check_index(*j, cfg.d)?;
            let u = parse_state(state, cfg.d)?;
            let out = match window {
                Some(w) => virops::vertex_mode_window(*i, *j, *m, *n, *l, &u, w)?,
                None => virops::vertex_mode(*i, *j, *m, *n, *l, &u)?,
            };
            let mut report = Report::ok(state_report(&out.specialize(r.as_ref().unwrap_or(&RParam::Generic)), cfg.output));
            if *check {
                let oracle = virops::vertex_mode_recursive(*i, *j, *m, *n, *l, &u)?;
                report.passed = oracle == out;
                let verdict = if report.passed { "PASS  closed form matches recursive construction" } else { "FAIL  closed form differs from recursive construction" };
                if cfg.output != Output::Json {
                    report.body.push_str(verdict);
                    report.body.push('\n');
                } else if !report.passed {
                    eprintln!("{verdict}");
                }
            }
            Ok(report)
        }
        Command::WeightBasis { weight, restricted } => {
            let w: Weight = weight.parse()?;
            let basis = fock::weight_space_basis(&w, *restricted);
            Ok(Report::ok(match cfg.output {
                Output::Json => {
                    let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
                    format!("{}\n", serde_json::to_string_pretty(&json!({ "weight": w.to_string(), "dim": basis.len(), "basis": names })).unwrap())
                }
                _ => {
                    let mut s = format!("weight {w}: dim {}\n", basis.len());
                    for m in &basis {
                        let _ = writeln!(s, "  {m}");
                    }
                    s
                }
            }))
        }
        Command::SingularCheck { p, nu, full_algebra, bound } => {
            if *p == 0 || *nu == 0 {
                return Err(Failure::Usage("--p and --nu must be positive".into()));
            }
            let r0 = r.unwrap_or(RParam::Value(singular_r(*p, *nu)));
            let u = det_power_state(*p, *nu);
            let d = if *full_algebra { cfg.d } else { 1 };
            let v = is_singular(&u, &r0, *full_algebra, d, *bound)?;
            let body = match cfg.output {
                Output::Json => {
                    let witness = v.witness.as_ref().map(|(g, out)| json!({ "generator": g.to_string(), "image": out.to_string() }));
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "p": p, "nu": nu, "r": r0.to_string(), "full_algebra": full_algebra,
                            "singular": v.singular, "generators_checked": v.generators_checked, "witness": witness,
                        }))
                        .unwrap()
                    )
                }
                _ => {
                    let mut s = format!("SINGULAR: {}\n", v.singular);
                    if let Some((g, out)) = &v.witness {
                        let _ = writeln!(s, "witness: {g} maps (det V_{p})^{nu} 1 to {out}");
                    }
                    s
                }
            };
            Ok(Report { body, passed: v.singular })
        }
        Command::SingularSweep { rmin, rmax, extra } => {
            if rmin > rmax {
                return Err(Failure::Usage("--rmin exceeds --rmax".into()));
            }
            let mut rs: Vec<RParam> = (*rmin..=*rmax).map(RParam::value).collect();
            for e in extra {
                rs.push(e.parse().map_err(|e| Failure::Usage(format!("--extra: {e}")))?);
            }
            let rows = sweep(&rs, cfg.max_degree, cfg.workers)?;
            let verdict = check_sweep(&rows);
            let body = match cfg.output {
                Output::Json => {
                    let items: Vec<Value> = rows
                        .iter()
                        .map(|row| {
                            let vectors: Vec<Value> = row.vectors.iter().map(State::to_json).collect();
                            json!({
                                "r0": row.r0, "weight": row.weight, "basis_dim": row.basis_dim,
                                "kernel_dim": row.kernel_dim, "vectors": vectors,
                            })
                        })
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&json!({ "rows": items, "pattern_ok": verdict.is_ok() })).unwrap())
                }
                _ => {
                    let mut s = String::from("r0,weight,basis_dim,kernel_dim\n");
                    for row in &rows {
                        let _ = writeln!(s, "{},{},{},{}", row.r0, row.weight, row.basis_dim, row.kernel_dim);
                    }
                    s
                }
            };
            if let Err(e) = &verdict {
                eprintln!("sweep pattern check failed: {e}");
            }
            Ok(Report { body, passed: verdict.is_ok() })
        }
        Command::VerifyDet { p } => {
            if *p == 0 {
                return Err(Failure::Usage("--p must be positive".into()));
            }
            let mut checks: Vec<Check> = (1..=*p).flat_map(|q| verify_det_lemmas(q, q as i64 + 1)).collect();
            checks.push(Check::from_result("power lowering m<=3, nu<=4", symvoa::singular::check_power_lowering(3, 4)));
            Ok(checks_report(&checks, cfg.output))
        }
        Command::GriessTable => {
            let t = GriessTable::build(cfg.d)?;
            let report = jordan_verify(cfg.d)?;
            let label = |(i, j): (u32, u32)| format!("omega[{i},{j}]");
            let body = match cfg.output {
                Output::Json => {
                    let mut products = Vec::new();
                    for a in 0..t.dim() {
                        for b in 0..t.dim() {
                            let coeffs: Vec<String> = t.product(a, b).iter().map(ToString::to_string).collect();
                            products.push(json!({ "left": label(t.basis[a]), "right": label(t.basis[b]), "coeffs": coeffs }));
                        }
                    }
                    let basis: Vec<String> = t.basis.iter().map(|&p| label(p)).collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "d": cfg.d, "basis": basis, "products": products,
                            "checks": report.checks, "scaling": report.scaling, "passed": report.passed(),
                        }))
                        .unwrap()
                    )
                }
                _ => {
                    let mut s = String::new();
                    for a in 0..t.dim() {
                        for b in a..t.dim() {
                            let terms: Vec<String> = t
                                .product(a, b)
                                .iter()
                                .zip(&t.basis)
                                .filter(|(c, _)| !c.is_zero())
                                .map(|(c, &p)| format!("{c}*{}", label(p)))
                                .collect();
                            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                            let _ = writeln!(s, "{} . {} = {rhs}", label(t.basis[a]), label(t.basis[b]));
                        }
                    }
                    s.push_str(&checks_report(&report.checks, cfg.output).body);
                    if let Some(sc) = &report.scaling {
                        let _ = writeln!(s, "isomorphism: diagonal scale {}, off-diagonal scale {}", sc.diagonal, sc.off_diagonal);
                    }
                    s
                }
            };
            Ok(Report { body, passed: report.passed() })
        }
        Command::VirasoroCheck { bound } => {
            let states = suite::basis_states(cfg.d, cfg.max_degree.min(4));
            let mut checks = Vec::new();
            let probe = virops::virasoro_bracket_probe(cfg.d, 2, -2, &State::vacuum());
            let want = virops::virasoro_central_term(cfg.d, 2, -2, &State::vacuum());
            checks.push(Check::from_result(
                "probe (2,-2) on vacuum",
                if probe == want { Ok(()) } else { Err(format!("got {probe}, expected {want}")) },
            ));
            checks.push(Check::from_result(
                format!("full relation |m|,|n|<={bound} on {} states", states.len()),
                states.iter().try_for_each(|u| virops::check_virasoro(cfg.d, *bound, u)),
            ));
            let mut report = checks_report(&checks, cfg.output);
            if cfg.output != Output::Json {
                report.body = format!("probe (2,-2) on 1 = {probe}\n{}", report.body);
            }
            Ok(report)
        }
        Command::PaperSuite { samples, only } => {
            let suite_cfg = SuiteConfig { d: cfg.d, max_degree: cfg.max_degree, seed: cfg.seed, samples: *samples, workers: cfg.workers };
            let ids: Vec<u8> = if only.is_empty() { (1..=11).collect() } else { only.clone() };
            if let Some(bad) = ids.iter().find(|&&i| !(1..=11).contains(&i)) {
                return Err(Failure::Usage(format!("no criterion {bad}")));
            }
            let mut criteria = Vec::new();
            for &id in &ids {
                let start = Instant::now();
                let c = suite::criterion(id, &suite_cfg);
                eprintln!("[{id:>2}] {:.2}s", start.elapsed().as_secs_f64());
                criteria.push(c);
            }
            if only.is_empty() {
                let start = Instant::now();
                criteria.push(suite::Criterion { id: 0, title: "module invariants", checks: suite::module_invariants(&suite_cfg), seconds: 0.0 });
                eprintln!("[ 0] {:.2}s", start.elapsed().as_secs_f64());
            }
            let passed = criteria.iter().all(|c| c.passed());
            let body = match cfg.output {
                Output::Json => {
                    let items: Vec<Value> = criteria
                        .iter()
                        .map(|c| json!({ "id": c.id, "title": c.title, "passed": c.passed(), "checks": c.checks }))
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&json!({ "passed": passed, "criteria": items })).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for c in &criteria {
                        let _ = writeln!(s, "{}  [{:>2}] {}", if c.passed() { "PASS" } else { "FAIL" }, c.id, c.title);
                        for k in &c.checks {
                            let _ = writeln!(s, "        {}  {}", if k.passed { "ok  " } else { "FAIL" }, k.name);
                            if !k.passed {
                                let _ = writeln!(s, "              witness: {}", k.detail);
                            }
                        }
                    }
                    let failed = criteria.iter().filter(|c| !c.passed()).count();
                    let _ = writeln!(s, "{} of {} criteria passed", criteria.len() - failed, criteria.len());
                    s
                }
            };
            Ok(Report { body, passed })
        }
    }
}

/// Exit status for a run: 0 on success, 1 on a failed verification,
/// 2 on a usage error.
pub fn exit_status(result: &Result<Report, Failure>) -> u8 {
    match result {
        Ok(r) if r.passed => 0,
        Ok(_) | Err(Failure::Verification(_)) => 1,
        Err(Failure::Usage(_)) => 2,
    }
}
