mod args;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use args::{Cli, Command, HeckeCmd, K0Cmd, ModuleArgs, ModuleCmd, ModuleKind, TableauxCmd, WeightsCmd};
use qcat_core::dahecke::{verify_dahecke_relations, x_spectrum, PsiModel};
use qcat_core::grothendieck::{self, restrict_parabolic, tpc3_split, CategAction};
use qcat_core::qmodules::{
    build_tilde_v, character_json, singular_vectors, submodule_closure, tensor_power, vector_rep, wedge_rep, QModule,
    COPRODUCT,
};
use qcat_core::report::Report;
use qcat_core::tableaux::{
    count_semistandard, enumerate_semistandard, rs_insert, Multipartition, Partition, Tableau,
};
use qcat_core::weights::{dominant_rep, minus_i, phi, plus_i, xi_classes, GlWeight, SlkWeight};
use qcat_core::{verify, LaurentInt};

/// A usage error naming the offending flag.
#[derive(Debug)]
struct Usage {
    flag: &'static str,
    message: String,
}

fn usage(flag: &'static str, message: impl ToString) -> Usage {
    Usage { flag, message: message.to_string() }
}

trait Flag<T> {
    fn flag(self, flag: &'static str) -> Result<T, Usage>;
}

impl<T, E: ToString> Flag<T> for Result<T, E> {
    fn flag(self, flag: &'static str) -> Result<T, Usage> {
        self.map_err(|e| usage(flag, e))
    }
}

/// The payload and whether it records a passing verification.
type Outcome = Result<(Value, bool), Usage>;

fn ok(v: impl Serialize) -> Outcome {
    Ok((serde_json::to_value(v).expect("serializable"), true))
}

fn report(rep: &Report) -> Value {
    json!({ "passed": rep.passed(), "checks": rep.checks })
}

fn need_k(k: usize) -> Result<(), Usage> {
    if k < 2 {
        return Err(usage("--k", "k must be at least 2"));
    }
    Ok(())
}

fn partition(parts: &[usize], flag: &'static str) -> Result<Partition, Usage> {
    Partition::new(parts.to_vec()).flag(flag)
}

fn label(a: &[i64], k: Option<usize>) -> Result<GlWeight, Usage> {
    if a.is_empty() {
        return Err(usage("--label", "label must be non-empty"));
    }
    if let Some(k) = k {
        if let Some(x) = a.iter().find(|&&x| x < 1 || x > k as i64) {
            return Err(usage("--label", format!("entry {x} outside 1..={k}")));
        }
    }
    Ok(GlWeight(a.to_vec()))
}

fn tableaux(cmd: TableauxCmd) -> Outcome {
    match cmd {
        TableauxCmd::Enumerate { shape, max_entry } => {
            let lam = partition(&shape, "--shape")?;
            let ts: Vec<Tableau> = enumerate_semistandard(&lam, max_entry);
            ok(json!({ "shape": lam, "max_entry": max_entry, "count": ts.len(), "tableaux": ts }))
        }
        TableauxCmd::Predicates { shape, word } => {
            let lam = partition(&shape, "--shape")?;
            ok(Tableau::fill(&lam, &word).flag("--word")?.summary())
        }
        TableauxCmd::Rs { word } => {
            let (p, q) = rs_insert(&word).flag("--word")?;
            ok(json!({ "insertion": p, "recording": q }))
        }
    }
}

fn weights(cmd: WeightsCmd) -> Outcome {
    match cmd {
        WeightsCmd::Phi { label: l, k } => {
            need_k(k)?;
            ok(phi(&label(&l.label, Some(k))?, k).flag("--label")?)
        }
        WeightsCmd::Plus { label: l, i } => ok(plus_i(&label(&l.label, None)?, i)),
        WeightsCmd::Minus { label: l, i } => ok(minus_i(&label(&l.label, None)?, i)),
        WeightsCmd::Poset { label: l, levi } => {
            let a = label(&l.label, None)?;
            let levi = levi.unwrap_or_else(|| vec![1; a.len()]);
            let xi = xi_classes(&dominant_rep(&a), &levi).flag("--levi")?;
            let mut v = xi.to_json();
            v["label_class"] = json!(xi.project(&a));
            Ok((v, true))
        }
    }
}

fn build_module(a: &ModuleArgs) -> Result<QModule<LaurentInt>, Usage> {
    need_k(a.k)?;
    if a.shape.is_some() && a.kind != ModuleKind::TildeV {
        return Err(usage("--shape", "only used with --kind tilde-v"));
    }
    match a.kind {
        ModuleKind::Vector => Ok(vector_rep(a.k)),
        ModuleKind::Wedge => wedge_rep(a.k, a.r).flag("--r"),
        ModuleKind::TensorPower => Ok(tensor_power(a.k, a.r, COPRODUCT)),
        ModuleKind::TildeV => {
            let shape = a.shape.as_ref().ok_or_else(|| usage("--shape", "required with --kind tilde-v"))?;
            let lam = partition(shape, "--shape")?;
            if lam.max_part() >= a.k {
                return Err(usage("--shape", format!("column heights must be below k = {}", a.k)));
            }
            build_tilde_v(&lam.slk_weight(a.k).flag("--shape")?, a.k).flag("--shape")
        }
    }
}

fn module(cmd: ModuleCmd) -> Outcome {
    match cmd {
        ModuleCmd::Build(a) => {
            let m = build_module(&a)?;
            let v = if a.q1 { m.specialize_q1().to_json() } else { m.to_json() };
            Ok((v, true))
        }
        ModuleCmd::Character(a) => Ok((character_json(&build_module(&a)?.character()), true)),
        ModuleCmd::Closure { shape, k } => {
            need_k(k)?;
            let lam = partition(&shape, "--shape")?;
            if lam.max_part() >= k {
                return Err(usage("--shape", format!("column heights must be below k = {k}")));
            }
            let m: QModule<LaurentInt> = build_tilde_v(&lam.slk_weight(k).flag("--shape")?, k).flag("--shape")?;
            let top = singular_vectors(&m, &SlkWeight::of_partition(&lam, k));
            let closure = submodule_closure(&m, &top);
            let dim = closure.module.dim();
            let count = count_semistandard(&lam, k);
            Ok((
                json!({
                    "shape": lam,
                    "k": k,
                    "ambient_dim": m.dim(),
                    "singular_dim": top.len(),
                    "closure_dim": dim,
                    "semistandard_count": count,
                    "character": character_json(&closure.module.character()),
                }),
                top.len() == 1 && dim == count,
            ))
        }
    }
}

fn psi(a: &args::PsiArgs) -> Result<PsiModel, Usage> {
    if a.n == 0 {
        return Err(usage("--n", "n must be positive"));
    }
    if a.r == 0 {
        return Err(usage("--r", "r must be positive"));
    }
    Ok(PsiModel::new(a.n, a.r, a.c))
}

fn hecke(cmd: HeckeCmd) -> Outcome {
    match cmd {
        HeckeCmd::Verify(a) => {
            let rep = verify_dahecke_relations(&psi(&a)?);
            let passed = rep.passed();
            Ok((
                json!({
                    "n": a.n, "r": a.r, "c": a.c,
                    "oracle_orientation": qcat_core::dahecke::CROSS_SIGN,
                    "printed_orientation_holds": rep.orientation_holds(1),
                    "passed": passed,
                    "relations": rep.relations,
                }),
                passed,
            ))
        }
        HeckeCmd::Spectrum { psi: a, h } => {
            let model = psi(&a)?;
            if h == 0 || h > a.r {
                return Err(usage("--h", format!("h must lie in 1..={}", a.r)));
            }
            let spec = x_spectrum(&model, h).flag("--h")?;
            let spec: Vec<Value> = spec.into_iter().map(|(e, m)| json!({ "eigenvalue": e, "multiplicity": m })).collect();
            ok(json!({ "h": h, "spectrum": spec }))
        }
    }
}

fn shape_arg(s: &str) -> Result<Multipartition, Usage> {
    let comps = s
        .split('/')
        .map(|c| args::usize_list(c).flag("--shape").and_then(|p| partition(&p, "--shape")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Multipartition::new(comps))
}

fn k0(cmd: K0Cmd) -> Outcome {
    match cmd {
        K0Cmd::Action { n, k } => {
            need_k(k)?;
            Ok((CategAction::new(n, k).to_json(), true))
        }
        K0Cmd::Verify { n, k } => {
            need_k(k)?;
            let mut rep = Report::new();
            rep.extend("action ", grothendieck::verify_slk_action(n, k));
            rep.extend("iso ", grothendieck::iso_to_tensor(n, k));
            Ok((report(&rep), rep.passed()))
        }
        K0Cmd::Tpc3 { label: l, levi, i, k } => {
            need_k(k)?;
            if i < 1 || i >= k as i64 {
                return Err(usage("--i", format!("i must lie in 1..{k}")));
            }
            let b = label(&l.label, Some(k))?;
            let groups = tpc3_split(&b, &levi, i, k).flag("--levi")?;
            let consistent = grothendieck::tpc3_consistent(&b, &levi, i, k).flag("--levi")?;
            let groups: Vec<Value> = groups.iter().map(|g| g.to_json()).collect();
            Ok((json!({ "groups": groups, "consistent": consistent }), consistent))
        }
        K0Cmd::Parabolic { shape, k } => {
            need_k(k)?;
            let shape = shape_arg(&shape)?;
            let res = restrict_parabolic(&shape, k).flag("--shape")?;
            let rep = verify::parabolic_report(&res).flag("--shape")?;
            let labels = |ls: &[GlWeight]| ls.iter().map(|a| a.0.clone()).collect::<Vec<_>>();
            let passed = rep.passed();
            Ok((
                json!({
                    "shape": res.shape.components(),
                    "k": k,
                    "column_strict_labels": labels(&res.column_labels),
                    "column_span_invariant": res.column_span_invariant,
                    "naive_column_closed": res.naive_column_closed,
                    "semistandard_labels": labels(&res.semistandard_labels),
                    "semistandard_closed": res.projection_bijective,
                    "naive_semistandard_closed": res.naive_semistandard_closed,
                    "character": character_json(&res.semistandard.character()),
                    "report": report(&rep),
                }),
                passed,
            ))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Tableaux(c) => tableaux(c),
        Command::Weights(c) => weights(c),
        Command::Module(c) => module(c),
        Command::Hecke(c) => hecke(c),
        Command::K0(c) => k0(c),
        Command::VerifyAll { max_n, max_k } => {
            need_k(max_k).map_err(|_| usage("--max-k", "max-k must be at least 2"))?;
            let rep = verify::verify_all(max_n, max_k).flag("--max-n")?;
            Ok((report(&rep), rep.passed()))
        }
    }
}

fn render(v: &Value, indent: Option<usize>) -> String {
    let mut s = match indent {
        None => serde_json::to_string(v).expect("json"),
        Some(n) => {
            let pad = vec![b' '; n];
            let mut buf = Vec::new();
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            v.serialize(&mut ser).expect("json");
            String::from_utf8(buf).expect("utf8")
        }
    };
    s.push('\n');
    s
}

fn write_atomic(path: &Path, data: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(data.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (out, indent) = (cli.out.clone(), cli.json_indent);
    let (value, passed) = match run(cli) {
        Ok(r) => r,
        Err(u) => {
            eprintln!("error: invalid value for {}: {}", u.flag, u.message);
            return ExitCode::from(2);
        }
    };
    let text = render(&value, indent);
    match out {
        Some(path) => {
            if let Err(e) = write_atomic(&path, &text) {
                eprintln!("error: invalid value for --out: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if passed { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_compact_by_default() {
        assert_eq!(render(&json!({"a": [1, 2]}), None), "{\"a\":[1,2]}\n");
        assert_eq!(render(&json!({"a": 1}), Some(2)), "{\n  \"a\": 1\n}\n");
    }

    #[test]
    fn shapes_split_on_slash() {
        let m = shape_arg("2,1/1").unwrap();
        assert_eq!(m.components().len(), 2);
        assert_eq!(shape_arg("1,2").unwrap_err().flag, "--shape");
    }

    #[test]
    fn labels_are_range_checked() {
        assert_eq!(label(&[1, 4], Some(3)).unwrap_err().flag, "--label");
        assert!(label(&[], None).is_err());
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x.json");
        write_atomic(&p, "1\n").unwrap();
        write_atomic(&p, "2\n").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "2\n");
    }
}
