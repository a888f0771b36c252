use std::fmt::Write;
use std::result::Result;

use pmcount::counting::{has_perfect_matching, ClauseStatus, DEFAULT_BRUTE_LIMIT};
use pmcount::format::{parse_oriented_edge_list, write_edge_list, write_oriented_edge_list};
use pmcount::graph::DEFAULT_CYCLE_LIMIT;
use pmcount::orientation::orient_random;
use pmcount::*;
use serde_json::json;

use crate::error::CliError;
use crate::report::{RunReport, Verdict};
use crate::spec::{read, GraphSpec, Layers};
use crate::{Construction, CountArgs, MethodArg, OrientArgs, ProductArgs, Source, VerifyArgs};

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_vertices: Option<usize>,
}

impl Limits {
    fn brute(self) -> usize {
        self.max_vertices.unwrap_or(DEFAULT_BRUTE_LIMIT)
    }

    fn cycles(self) -> usize {
        self.max_vertices.unwrap_or(DEFAULT_CYCLE_LIMIT)
    }

    fn identities(self) -> usize {
        self.max_vertices.unwrap_or(24)
    }
}

struct Factor {
    spec: GraphSpec,
    graph: Graph,
    tree: Option<Tree>,
    explicit_tree: bool,
}

impl Factor {
    fn load(src: &Source) -> Result<Self, CliError> {
        let (spec, explicit_tree) = match (&src.graph, &src.tree) {
            (Some(g), None) => (g.clone(), false),
            (None, Some(t)) => (t.clone(), true),
            _ => {
                return Err(CliError::Spec(
                    "exactly one of --graph or --tree is required".into(),
                ))
            }
        };
        let graph = spec.load()?;
        let tree = if explicit_tree {
            Some(validate_tree(graph.clone())?)
        } else {
            validate_tree(graph.clone()).ok()
        };
        Ok(Factor {
            spec,
            graph,
            tree,
            explicit_tree,
        })
    }

    fn require_tree(&self) -> Result<&Tree, CliError> {
        match &self.tree {
            Some(t) => Ok(t),
            None => Err(validate_tree(self.graph.clone()).unwrap_err().into()),
        }
    }

    fn path_len(&self) -> Option<usize> {
        let t = self.tree.as_ref()?;
        t.graph()
            .degree_sequence()
            .iter()
            .all(|&d| d <= 2)
            .then(|| t.vertex_count())
    }

    fn orientation(&self, seed: Option<u64>) -> OrientedGraph {
        match seed {
            Some(s) => orient_random(&self.graph, s),
            None => orient_lexicographic(&self.graph),
        }
    }
}

fn no_structure(what: &str) -> CliError {
    CliError::Structure(format!("{what}; use --method brute to count exhaustively"))
}

/// Closed forms, or `None` when the structure has none. Trigonometric
/// products are tried first for `--graph` paths; if they cannot be
/// evaluated reliably the exact tree formulas take over.
fn formula(
    layers: Option<Layers>,
    factor: &Factor,
    strict: bool,
) -> Result<Option<CountResult>, CliError> {
    let (Some(layers), Some(t)) = (layers, &factor.tree) else {
        return Ok(None);
    };
    let mut deferred = None;
    if let (false, Some(n)) = (factor.explicit_tree, factor.path_len()) {
        let trig = match layers {
            Layers::Cycle(4) => Some(count_c4_path(n)),
            Layers::Path(m) => Some(count_grid_dimer(m, n)),
            Layers::Cycle(_) => None,
        };
        match trig {
            Some(Ok(r)) => return Ok(Some(r)),
            Some(Err(e @ Error::NumericalConsistency(_))) => deferred = Some(e),
            Some(Err(e)) => return Err(e.into()),
            None => {}
        }
    }
    let exact = match layers {
        Layers::Cycle(4) => Some(count_c4_tree(t)),
        Layers::Path(4) => Some(count_p4_tree(t)),
        Layers::Path(3) => match count_p3_tree(t) {
            Err(Error::Precondition(_)) if !strict => None,
            r => Some(r),
        },
        _ => None,
    };
    match (exact, deferred) {
        (Some(r), _) => Ok(Some(r?)),
        (None, Some(e)) if strict => Err(e.into()),
        _ => Ok(None),
    }
}

/// `orient_c4_tree` stacks its layers as 0, 1, 3, 2 around the cycle;
/// swap the last two so the numbering matches `cartesian_product(C4, T)`.
fn c4_in_cycle_order(d: &OrientedGraph, n: usize) -> Result<OrientedGraph, CliError> {
    let perm: Vec<usize> = (0..4 * n)
        .map(|v| [0, 1, 3, 2][v / n] * n + v % n)
        .collect();
    Ok(d.relabel(&perm)?)
}

fn constructed(layers: Option<Layers>, factor: &Factor) -> Result<Option<OrientedGraph>, CliError> {
    let (Some(layers), Some(t)) = (layers, &factor.tree) else {
        return Ok(None);
    };
    let d = factor.orientation(None);
    Ok(match layers {
        Layers::Cycle(4) => Some(c4_in_cycle_order(&orient_c4_tree(&d)?, t.vertex_count())?),
        Layers::Path(2) => Some(orient_double(&d)),
        Layers::Path(3) if has_perfect_matching(t.graph())? => Some(orient_layered(&d, 3)?),
        Layers::Path(4) => Some(orient_layered(&d, 4)?),
        _ => None,
    })
}

fn load_orientation(path: &str, over: &Graph) -> Result<OrientedGraph, CliError> {
    let d = parse_oriented_edge_list(&read(path)?)?;
    if d.base() != over {
        return Err(CliError::Structure(format!(
            "{path} orients a different graph ({} vertices, {} edges) than the input ({} vertices, {} edges)",
            d.vertex_count(),
            d.arc_count(),
            over.vertex_count(),
            over.edge_count()
        )));
    }
    Ok(d)
}

fn describe(layers: Option<Layers>, spec: &GraphSpec) -> String {
    match layers {
        Some(l) => format!("{l} × {spec}"),
        None => spec.to_string(),
    }
}

pub fn count(args: &CountArgs, limits: Limits) -> Result<RunReport, CliError> {
    let factor = Factor::load(&args.source)?;
    let target = match args.product {
        Some(l) => cartesian_product(&l.graph(), &factor.graph),
        None => factor.graph.clone(),
    };
    let oriented = args
        .orient_file
        .as_deref()
        .map(|p| load_orientation(p, &target))
        .transpose()?;
    let pfaffian = || -> Result<Option<CountResult>, CliError> {
        let d = match &oriented {
            Some(d) => Some(d.clone()),
            None => constructed(args.product, &factor)?,
        };
        Ok(match d {
            Some(d) => Some(count_pfaffian(&target, &d)?),
            None => None,
        })
    };
    let brute = || count_brute_with_limit(&target, limits.brute());

    let res = match args.method {
        MethodArg::Auto => match formula(args.product, &factor, false)? {
            Some(r) => r,
            None => match pfaffian()? {
                Some(r) => r,
                None => brute()?,
            },
        },
        MethodArg::Brute => brute()?,
        MethodArg::Formula => formula(args.product, &factor, true)?
            .ok_or_else(|| no_structure("no closed form is known for this input"))?,
        MethodArg::Pfaffian => pfaffian()?.ok_or_else(|| {
            no_structure(
                "no Pfaffian orientation is constructed for this input (pass --orient-file)",
            )
        })?,
        MethodArg::NarumiHosoya => match (args.product, factor.path_len()) {
            (Some(Layers::Cycle(4)), Some(n)) => count_c4_path(n)?,
            _ => return Err(no_structure("narumi-hosoya needs --product c4 and a path")),
        },
        MethodArg::Kasteleyn => match (args.product, factor.path_len()) {
            (Some(Layers::Path(m)), Some(n)) => count_grid_dimer(m, n)?,
            _ => return Err(no_structure("kasteleyn needs --product pM and a path")),
        },
    };

    let mut report = RunReport::new(res.method.tag());
    report.count = Some(res.count.to_string());
    report.detail("vertices", target.vertex_count());
    report.detail("edges", target.edge_count());
    let mut human = String::new();
    let _ = writeln!(human, "graph: {}", describe(args.product, &factor.spec));
    let _ = writeln!(
        human,
        "size: {} vertices, {} edges",
        target.vertex_count(),
        target.edge_count()
    );
    let _ = writeln!(human, "method: {}", res.method);
    if let (Some(dim), Some(det)) = (res.matrix_dim, &res.determinant) {
        report.detail("matrix_dim", dim);
        report.detail("determinant", det.to_string());
        let _ = writeln!(human, "determinant: {det} ({dim}×{dim})");
    }
    if let Some(v) = res.float_value {
        report.detail("float_value", v);
        let _ = writeln!(human, "floating product: {v:.6e}");
    }
    if let Some(note) = &res.note {
        report.detail("note", note.as_str());
        let _ = writeln!(human, "note: {note}");
    }
    let _ = writeln!(human, "count: {}", res.count);
    report.human = human;
    Ok(report)
}

fn build_orientation(
    factor: &Factor,
    c: &Construction,
) -> Result<(OrientedGraph, &'static str, String), CliError> {
    if c.chosen() != 1 {
        return Err(CliError::Spec(
            "choose exactly one of --c4, --layers N, --double".into(),
        ));
    }
    let d = factor.orientation(c.seed);
    let n = factor.graph.vertex_count();
    if c.c4 {
        let o = c4_in_cycle_order(&orient_c4_tree(&d)?, n)?;
        let layout = format!("layers 0,1,2,3 follow the 4-cycle; vertex v of layer i is i*{n} + v");
        Ok((o, "orient-c4", layout))
    } else if let Some(m) = c.layers {
        let o = orient_layered(&d, m)?;
        Ok((
            o,
            "orient-layered",
            format!("vertex v of layer i is i*{n} + v"),
        ))
    } else {
        Ok((
            orient_double(&d),
            "orient-double",
            format!("vertex v of copy i is i*{n} + v"),
        ))
    }
}

pub fn orient(args: &OrientArgs) -> Result<RunReport, CliError> {
    let factor = Factor::load(&args.source)?;
    let (o, method, layout) = build_orientation(&factor, &args.construction)?;
    let text = write_oriented_edge_list(&o, &[format!("{method} of {}", factor.spec), layout]);
    let mut report = RunReport::new(method);
    report.detail("vertices", o.vertex_count());
    report.detail("arcs", o.arc_count());
    report.human = text.clone();
    report.edge_list = Some(text);
    Ok(report)
}

fn status(s: ClauseStatus) -> &'static str {
    match s {
        ClauseStatus::Pass => "pass",
        ClauseStatus::Fail => "FAIL",
        ClauseStatus::Skipped => "skipped",
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn verify(args: &VerifyArgs, limits: Limits) -> Result<RunReport, CliError> {
    if !args.pfaffian && !args.identities {
        return Err(CliError::Spec(
            "nothing to verify: pass --pfaffian and/or --identities".into(),
        ));
    }
    let factor = match (&args.source.graph, &args.source.tree) {
        (None, None) if args.orient_file.is_some() && !args.identities => None,
        _ => Some(Factor::load(&args.source)?),
    };
    let mut report = RunReport::new("verify");
    let mut human = String::new();
    let mut ok = true;

    if args.pfaffian {
        let d = match (&args.orient_file, &factor) {
            (Some(path), Some(f)) => load_orientation(path, &f.graph)?,
            (Some(path), None) => parse_oriented_edge_list(&read(path)?)?,
            (None, Some(f)) => build_orientation(f, &args.construction)?.0,
            (None, None) => unreachable!("a source is loaded unless an orientation file is given"),
        };
        let r = check_pfaffian(&d, limits.cycles())?;
        ok &= r.passed();
        report.violations = r.violations.iter().map(|c| c.vertices().to_vec()).collect();
        report.detail(
            "pfaffian",
            json!({
                "passed": r.passed(),
                "vertices": d.vertex_count(),
                "cycles": r.cycles,
                "nice_even_cycles": r.nice_even_cycles,
            }),
        );
        let _ = writeln!(
            human,
            "pfaffian: {} ({} vertices, {} cycles, {} nice even cycles, {} violations)",
            verdict(r.passed()),
            d.vertex_count(),
            r.cycles,
            r.nice_even_cycles,
            r.violations.len()
        );
        for c in &r.violations {
            let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
            let _ = writeln!(human, "  not oddly oriented: {}", vs.join("-"));
        }
    }

    if args.identities {
        let f = factor.as_ref().expect("identities need a source");
        let t = f.require_tree()?;
        let r = verify_identities(t, limits.identities())?;
        ok &= r.passed();
        report.count = Some(r.c4_count.to_string());
        report.detail(
            "identities",
            json!({
                "passed": r.passed(),
                "c4_count": r.c4_count.to_string(),
                "decomposition": r.decomposition.as_ref().map(|d| json!({
                    "factor": d.factor,
                    "root": d.root.to_string(),
                })),
                "p3_count": r.p3_count.as_ref().map(|c| c.to_string()),
                "p4_count": r.p4_count.to_string(),
                "clauses": r.clauses,
            }),
        );
        let _ = writeln!(human, "identities: {}", verdict(r.passed()));
        if let Some(d) = &r.decomposition {
            let _ = writeln!(human, "  Pm(C4 × T) = {} = {d}", r.c4_count);
        }
        for c in &r.clauses {
            let _ = writeln!(human, "  {}: {} ({})", c.name, status(c.status), c.detail);
        }
    }

    let _ = writeln!(human, "verdict: {}", verdict(ok));
    report.verdict = Some(if ok { Verdict::Pass } else { Verdict::Fail });
    report.human = human;
    Ok(report)
}

pub fn product(args: &ProductArgs) -> Result<RunReport, CliError> {
    let g = args.left.load()?;
    let h = args.right.load()?;
    let p = cartesian_product(&g, &h);
    let text = write_edge_list(
        &p,
        &[
            format!("{} × {}", args.left, args.right),
            format!(
                "vertex (i, j) with i in {} and j in {} is i*{} + j",
                args.left,
                args.right,
                h.vertex_count()
            ),
        ],
    );
    let mut report = RunReport::new("product");
    report.detail("vertices", p.vertex_count());
    report.detail("edges", p.edge_count());
    report.human = text.clone();
    report.edge_list = Some(text);
    Ok(report)
}
