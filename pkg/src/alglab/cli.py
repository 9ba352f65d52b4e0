"""Command-line surface.

Exit codes follow one contract everywhere: 0 = success / all checks pass,
1 = a genuine violation of a certified statement, 2 = input or hypothesis
error.  Query verbs (rdep, rewrite, frobenius validate) exit 0 when the
query itself succeeds; frobenius validate exits 1 on an invalid triple so
scripts can use it as a predicate.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from . import formats, rewrite, search as search_mod, verify as verify_mod
from .errors import AlgLabError, InputError
from .frobenius import NQRTriple, validate_nqr
from .grading import nontrivial_components
from .rdep import d_set, is_r_dependent, rigid_subsequence
from .series import derived_series, lower_central_series

SEQ_CAP = 6  # exponent scans grow like q^k; keep CLI inputs desk-scale


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str) -> formats.LoadedAlgebra:
    try:
        return formats.load(path)
    except FileNotFoundError:
        _fail(2, f"no such file: {path}")
    except AlgLabError as exc:
        _fail(2, str(exc))


def _parse_seq(raw: str) -> list[int]:
    try:
        entries = [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        _fail(2, f"could not parse integer list {raw!r}")
    if not entries:
        _fail(2, "empty sequence")
    return entries


def _triple(n: int, q: int, r: int) -> NQRTriple:
    try:
        res = validate_nqr(n, q, r)
    except InputError as exc:
        _fail(2, str(exc))
    if not res.valid:
        _fail(2, f"(n={n}, q={q}, r={r}) fails the order condition at divisor {res.witness}")
    return NQRTriple(n, q, r)


@click.group()
def main():
    """Exact toolkit for graded Lie-type algebras over prime fields."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def check(file: str, as_json: bool):
    """Validate FILE and certify its product identity (and grading if present)."""
    loaded = _load(file)
    report = verify_mod.verify(loaded, "all")
    wanted = {"identity", "grading"}
    results = [r for r in report.results if r.check in wanted]
    code = 1 if any(r.status == verify_mod.Status.VIOLATION for r in results) else 0
    if as_json:
        click.echo(json.dumps([_result_doc(r) for r in results], indent=2))
    else:
        for r in results:
            click.echo(f"{r.check}: {r.status.value} - {r.message}")
    sys.exit(code)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--kind", type=click.Choice(["derived", "lcs"]), default="derived")
@click.option("--json", "as_json", is_flag=True)
def series(file: str, kind: str, as_json: bool):
    """Print the derived or lower central series of FILE."""
    loaded = _load(file)
    res = derived_series(loaded.algebra) if kind == "derived" else lower_central_series(loaded.algebra)
    metric = "derived_length" if kind == "derived" else "nilpotency_class"
    if as_json:
        click.echo(
            json.dumps(
                {
                    "kind": kind,
                    "ranks": [t.rank for t in res.terms],
                    "stabilized": res.stabilized,
                    metric: res.length,
                },
                indent=2,
            )
        )
    else:
        ranks = " > ".join(str(t.rank) for t in res.terms)
        click.echo(f"term ranks: {ranks}")
        if res.length is not None:
            click.echo(f"{metric}: {res.length}")
        else:
            click.echo(f"{metric}: none (series stabilizes at rank {res.terms[-1].rank})")
    sys.exit(0)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
def grade(file: str, as_json: bool):
    """Report the grading of FILE: components, d, and the grading law check."""
    loaded = _load(file)
    if loaded.grading is None:
        _fail(2, "file has no grading block")
    A, G = loaded.algebra, loaded.grading
    from .grading import check_grading

    rep = check_grading(A, G)
    nontrivial = sorted(nontrivial_components(A, G))
    if as_json:
        click.echo(
            json.dumps(
                {
                    "n": G.n,
                    "degrees": list(G.degrees),
                    "nontrivial": nontrivial,
                    "d": len(nontrivial),
                    "law_ok": rep.ok,
                    "violations": len(rep.violations),
                },
                indent=2,
            )
        )
    else:
        click.echo(f"modulus n = {G.n}; degrees {list(G.degrees)}")
        click.echo(f"nontrivial components: {nontrivial} (d = {len(nontrivial)})")
        click.echo(f"grading law: {'ok' if rep.ok else 'VIOLATED'}")
    sys.exit(0 if rep.ok else 1)


@main.group()
def frobenius():
    """Automorphism-action commands."""


@frobenius.command("validate")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def frobenius_validate(n: int, q: int, r: int, as_json: bool):
    """Check the multiplicative-order condition on (n, q, r)."""
    try:
        res = validate_nqr(n, q, r)
    except InputError as exc:
        _fail(2, str(exc))
    if as_json:
        click.echo(json.dumps({"n": n, "q": q, "r": r, "valid": res.valid, "witness": res.witness}))
    elif res.valid:
        click.echo(f"(n={n}, q={q}, r={r}) is valid")
    else:
        click.echo(f"(n={n}, q={q}, r={r}) is invalid: order of r mod {res.witness} != {q}")
    sys.exit(0 if res.valid else 1)


@frobenius.command("grade")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
def frobenius_grade(file: str, as_json: bool):
    """Compute the eigenspace grading of FILE's phi and check the h-permutation."""
    loaded = _load(file)
    if loaded.action is None:
        _fail(2, "file has no action block")
    report = verify_mod.verify(loaded, "frobenius")
    result = report.results[0]
    if as_json:
        click.echo(json.dumps(_result_doc(result), indent=2))
    else:
        click.echo(f"frobenius: {result.status.value} - {result.message}")
    sys.exit(report.exit_code)


@main.group()
def rdep():
    """Index-sequence dependence queries."""


def _cap_len(entries: list[int], what: str):
    if len(entries) > SEQ_CAP:
        _fail(2, f"{what} longer than {SEQ_CAP} entries is not accepted on the CLI")


@rdep.command("dep")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--seq", type=str, required=True, help="comma-separated nonzero residues")
@click.option("--json", "as_json", is_flag=True)
def rdep_dep(n: int, q: int, r: int, seq: str, as_json: bool):
    """Decide whether SEQ is r-dependent; prints the first witness if so."""
    nqr = _triple(n, q, r)
    entries = _parse_seq(seq)
    _cap_len(entries, "sequence")
    try:
        res = is_r_dependent(nqr, entries)
    except InputError as exc:
        _fail(2, str(exc))
    if as_json:
        click.echo(json.dumps({"dependent": res.dependent, "witness": res.witness}))
    elif res.dependent:
        click.echo(f"dependent  witness exponents {list(res.witness)}")
    else:
        click.echo("independent")
    sys.exit(0)


@rdep.command("dset")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--prefix", type=str, required=True)
@click.option("--json", "as_json", is_flag=True)
def rdep_dset(n: int, q: int, r: int, prefix: str, as_json: bool):
    """Members of the dependence set of PREFIX (all j completing it to a
    dependent sequence)."""
    nqr = _triple(n, q, r)
    entries = _parse_seq(prefix)
    _cap_len(entries, "prefix")
    try:
        ds = d_set(nqr, entries)
    except InputError as exc:
        _fail(2, str(exc))
    members = sorted(ds.members)
    if as_json:
        click.echo(json.dumps({"prefix": list(ds.prefix), "members": members, "size": ds.size}))
    else:
        shown = ",".join(str(a) for a in ds.prefix)
        click.echo(f"D({shown}) = {members}  (size {ds.size} <= q^{len(entries) + 1})")
    sys.exit(0)


@rdep.command("rigid")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--seq", type=str, required=True)
@click.option("--m", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def rdep_rigid(n: int, q: int, r: int, seq: str, m: int, as_json: bool):
    """Find an independent subsequence of length M containing the first entry."""
    nqr = _triple(n, q, r)
    entries = _parse_seq(seq)
    if m > SEQ_CAP:
        _fail(2, f"m larger than {SEQ_CAP} is not accepted on the CLI")
    try:
        sub = rigid_subsequence(nqr, entries, m)
    except InputError as exc:
        _fail(2, str(exc))
    if as_json:
        click.echo(json.dumps({"found": sub is not None, "subsequence": list(sub) if sub else None}))
    elif sub is None:
        click.echo("none")
    else:
        click.echo(",".join(str(x) for x in sub))
    sys.exit(0)


@main.group(name="rewrite")
def rewrite_group():
    """Bracket-term commands."""


@rewrite_group.command("normalize")
@click.argument("expr", type=str)
@click.option("--alpha", type=int, required=True)
@click.option("--beta", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def rewrite_normalize(expr: str, alpha: int, beta: int, p: int, as_json: bool):
    """Left-normalize EXPR into a combination of simple products."""
    try:
        term = rewrite.parse(expr)
        combo = rewrite.normalize(term, alpha, beta, p)
    except AlgLabError as exc:
        _fail(2, str(exc))
    if as_json:
        doc = [
            {"word": [a.name for a in word], "coeff": coeff}
            for word, coeff in combo.terms
        ]
        click.echo(json.dumps({"p": p, "terms": doc}, indent=2))
    else:
        click.echo(rewrite.format_combo(combo))
    sys.exit(0)


def _result_doc(r: verify_mod.CheckResult) -> dict:
    return {
        "check": r.check,
        "status": r.status.value,
        "message": r.message,
        "details": r.details,
    }


@main.command(name="verify")
@click.argument("lemma_id", type=str)
@click.argument("file", type=click.Path())
@click.option("--c", type=int, default=None, help="level for selective-nilpotency")
@click.option("--json", "as_json", is_flag=True)
def verify_cmd(lemma_id: str, file: str, c: Optional[int], as_json: bool):
    """Run a named verification (or `all`) against FILE.

    Exit 0: pass.  Exit 1: genuine violation.  Exit 2: input/hypothesis error.
    """
    loaded = _load(file)
    try:
        report = verify_mod.verify(loaded, lemma_id, c)
    except AlgLabError as exc:
        _fail(2, str(exc))
    if as_json:
        click.echo(json.dumps([_result_doc(r) for r in report.results], indent=2))
    else:
        for r in report.results:
            click.echo(f"{r.check}: {r.status.value} - {r.message}")
    sys.exit(report.exit_code)


@main.command(name="search")
@click.option("--spec", "spec_path", type=click.Path(), required=True)
@click.option("--seed", type=int, default=None, help="override the spec's seed")
@click.option("--json", "as_json", is_flag=True)
def search_cmd(spec_path: str, seed: Optional[int], as_json: bool):
    """Enumerate or sample graded tables per SPEC and report survivors."""
    try:
        spec = search_mod.load_spec(spec_path)
        if seed is not None:
            from dataclasses import replace

            spec = search_mod.validate_spec(replace(spec, seed=seed))
        result = search_mod.search(spec)
    except FileNotFoundError:
        _fail(2, f"no such file: {spec_path}")
    except AlgLabError as exc:
        _fail(2, str(exc))
    summary_docs = [vars(b) for b in result.summary]
    if as_json:
        click.echo(
            json.dumps(
                {
                    "candidates": result.candidates,
                    "survivors": list(search_mod.iter_survivor_documents(result)),
                    "summary": summary_docs,
                },
                indent=2,
            )
        )
    else:
        for doc in search_mod.iter_survivor_documents(result):
            click.echo(json.dumps(doc, separators=(",", ":")))
        click.echo(f"candidates: {result.candidates}  survivors: {len(result.survivors)}")
        for b in result.summary:
            click.echo(
                f"bucket n={b.n} q={b.q} r={b.r} c={b.c} d={b.d}: "
                f"count={b.count} max_derived_length={b.max_derived_length} "
                f"max_nilpotency_class={b.max_nilpotency_class} "
                f"nonsolvable={b.nonsolvable} nonnilpotent={b.nonnilpotent}"
            )
    sys.exit(0)


if __name__ == "__main__":
    main()
