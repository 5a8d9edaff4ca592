"""Operator command line: validate models, assess single videos or batches,
emit reports, prompts and distribution summaries.

Exit codes: 0 success, 1 domain or validation error, 2 I/O error.
"""

from __future__ import annotations

import csv
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import click

from .calibration import calibrate
from .fuzzy import ConfigError, InputError
from .measures import MeasureDocumentError, batch_evaluate, parse_measures_file
from .model import EvaluationError, assess, default_model, load_model_file, validate_model
from .report import CompletionClient, PromptConfig, enhance_report, generate_prompt, render_report

EXIT_DOMAIN = 1
EXIT_IO = 2


def _load_graph(model_path):
    if model_path is None:
        return default_model()
    path = Path(model_path)
    if not path.exists():
        click.echo(f"error: model file not found: {path}", err=True)
        sys.exit(EXIT_IO)
    try:
        return load_model_file(path)
    except OSError as exc:
        click.echo(f"error: cannot read model: {exc}", err=True)
        sys.exit(EXIT_IO)
    except ConfigError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)


def _meta():
    return {"generated_at": datetime.now(timezone.utc).isoformat()}


@click.group()
@click.version_option(package_name="glmp-suspect")
def main():
    """Suspicion-of-disinformation scoring from multimodal video measures."""


@main.command()
@click.option("--model", "model_path", type=click.Path(), default=None,
              help="Model config path (default: shipped political-disinfo-v1).")
def validate(model_path):
    """Load and validate a model config."""
    g = _load_graph(model_path)
    issues = validate_model(g)
    counts = g.level_counts()
    if issues:
        for issue in issues:
            click.echo(f"invalid: {issue}", err=True)
        sys.exit(EXIT_DOMAIN)
    click.echo(f"{sum(counts)} nodes ({'/'.join(str(c) for c in counts)})")


@main.command(name="assess")
@click.argument("measures_path", type=click.Path())
@click.option("--model", "model_path", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "prompt"]), default="text")
@click.option("--depth", type=click.IntRange(1, 5), default=5, help="Report depth.")
@click.option("--policy", type=click.Choice(["strict", "renormalize"]), default="renormalize")
@click.option("--enhance", is_flag=True, help="Send the prompt to the external text service.")
@click.option("--endpoint", default=None, help="Text service endpoint URL.")
@click.option("--service-model", default="", help="Text service model name.")
@click.option("--timeout", type=float, default=30.0, help="Text service timeout (s).")
@click.option("--max-chars", type=int, default=8000, help="Prompt length budget.")
@click.option("--no-meta", is_flag=True, help="Suppress the timestamp meta block.")
def assess_cmd(measures_path, model_path, fmt, depth, policy, enhance,
               endpoint, service_model, timeout, max_chars, no_meta):
    """Assess one measure document and print the result."""
    g = _load_graph(model_path)
    path = Path(measures_path)
    if not path.exists():
        click.echo(f"error: measures file not found: {path}", err=True)
        sys.exit(EXIT_IO)
    try:
        m = parse_measures_file(path, g.schema)
        a = assess(g, m, policy=policy)
    except (MeasureDocumentError, EvaluationError, ConfigError, InputError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)

    if fmt == "json":
        out = a.as_dict(tau=g.report_tau)
        if not no_meta:
            out["meta"] = _meta()
        click.echo(json.dumps(out, indent=1, sort_keys=True))
        return

    prompt = generate_prompt(g, a, PromptConfig(depth=depth, max_chars=max_chars))
    if fmt == "prompt":
        click.echo(prompt.text)
        return

    if enhance:
        client = CompletionClient(endpoint or "", model=service_model, timeout=timeout) \
            if endpoint else None
        result = enhance_report(prompt, client)
        for warning in result.warnings:
            click.echo(f"warning: {warning}", err=True)
        click.echo(result.text)
        return

    click.echo(f"Suspicion of disinformation: {a.suspicion.reported_label} "
               f"(value {a.suspicion.value:.3f})")
    click.echo(render_report(g, a.tree, depth=depth), nl=False)
    for warning in a.warnings:
        click.echo(f"warning: {warning}", err=True)


def _collect_inputs(batch_input: Path) -> list[Path]:
    if batch_input.is_dir():
        return sorted(batch_input.glob("*.measures.json"))
    paths = []
    with open(batch_input, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#") or row[0].strip() == "path":
                continue
            paths.append(Path(row[0].strip()))
    return paths


@main.command()
@click.argument("batch_input", type=click.Path())
@click.option("--model", "model_path", type=click.Path(), default=None)
@click.option("--policy", type=click.Choice(["strict", "renormalize"]), default="renormalize")
@click.option("--jobs", type=click.IntRange(1, 64), default=1, help="Parallel workers.")
@click.option("--output", "output_path", type=click.Path(), default=None,
              help="JSONL results file (default: stdout).")
@click.option("--summary", "summary_path", type=click.Path(), default=None,
              help="Summary JSON file (default: stderr).")
@click.option("--no-meta", is_flag=True)
def batch(batch_input, model_path, policy, jobs, output_path, summary_path, no_meta):
    """Assess a directory or manifest CSV of measure documents.

    Emits one JSON line per input plus a histogram summary over the five
    suspicion labels. Per-item failures are reported, not fatal.
    """
    g = _load_graph(model_path)
    source = Path(batch_input)
    if not source.exists():
        click.echo(f"error: batch input not found: {source}", err=True)
        sys.exit(EXIT_IO)
    paths = _collect_inputs(source)
    if not paths:
        click.echo("error: no inputs", err=True)
        sys.exit(EXIT_DOMAIN)

    sets = []
    parse_failures = []
    for path in paths:
        try:
            sets.append(parse_measures_file(path, g.schema))
        except (OSError, MeasureDocumentError) as exc:
            parse_failures.append((str(path), f"{type(exc).__name__}: {exc}"))
            sets.append(None)

    usable = [(i, s) for i, s in enumerate(sets) if s is not None]
    result = batch_evaluate([s for _, s in usable], g, policy=policy, jobs=jobs)

    lines = [None] * len(paths)
    by_pos = {orig: item for (orig, _), item in zip(usable, result.items)}
    fail_iter = iter(parse_failures)
    for i, path in enumerate(paths):
        if sets[i] is None:
            src, err = next(fail_iter)
            lines[i] = {"source": src, "error": err}
        else:
            item = by_pos[i]
            if item.error is not None:
                lines[i] = {"source": str(path), "error": item.error}
            else:
                record = item.assessment.as_dict(include_tree=False, tau=g.report_tau)
                record["source"] = str(path)
                lines[i] = record

    out_fh = open(output_path, "w", encoding="utf-8") if output_path else sys.stdout
    try:
        for line in lines:
            out_fh.write(json.dumps(line, sort_keys=True) + "\n")
    finally:
        if output_path:
            out_fh.close()

    summary = result.summary()
    summary["failed"] += len(parse_failures)
    summary["total"] += len(parse_failures)
    summary["failures"].extend({"source": s, "error": e} for s, e in parse_failures)
    if not no_meta:
        summary["meta"] = _meta()
    text = json.dumps(summary, indent=1, sort_keys=True)
    if summary_path:
        Path(summary_path).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text, err=True)


@main.command(name="calibrate")
@click.option("--target", type=float, default=0.65, help="Reference aggregated value.")
@click.option("--tolerance", type=float, default=0.02)
def calibrate_cmd(target, tolerance):
    """Re-run the capacity calibration grid search and print the result."""
    try:
        result = calibrate(target=target, tolerance=tolerance)
    except RuntimeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    click.echo(json.dumps({
        "p": result.p,
        "beta": result.beta,
        "reference_value": result.value,
    }, indent=1))


if __name__ == "__main__":
    main()
