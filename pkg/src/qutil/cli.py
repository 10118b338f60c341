"""Command-line client for the harness service.

By default the service runs in-process; pass --server to talk to a remote
instance instead. Every subcommand writes canonical JSON artifacts plus a
Markdown summary into the output directory, along with a manifest
(config echo, seed, versions) sufficient to reproduce the run. Wall-clock
timing lands in a separate timing.json so the canonical artifacts are
byte-identical across reruns with the same config and seed.

Exit codes: 0 success, 1 configuration error, 2 runtime error.
"""
from __future__ import annotations

import json
import os
import platform
import sys
import tempfile
import warnings

import click
import httpx
import numpy

from . import __version__

warnings.filterwarnings(
    "ignore", message="Using `httpx` with `starlette.testclient`"
)

CONFIG_EXIT = 1
RUNTIME_EXIT = 2


class ServiceClient:
    """Thin wrapper: in-process app by default, HTTP when --server is set."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def call(self, method: str, path: str, payload: dict | None = None) -> dict:
        try:
            if method == "get":
                response = self._client.get(path)
            else:
                response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise click.ClickException(f"service unreachable: {exc}")
        if response.status_code == 400 or response.status_code == 422:
            detail = response.json().get("detail", response.text)
            click.echo(f"error: {detail}", err=True)
            sys.exit(CONFIG_EXIT)
        if response.status_code >= 500:
            click.echo(f"error: service failure: {response.text}", err=True)
            sys.exit(RUNTIME_EXIT)
        return response.json()


def _write_text(path: str, text: str):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path))
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_json(path: str, doc: dict):
    _write_text(path, json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _write_manifest(out: str, command: str, config: dict):
    _write_json(
        os.path.join(out, "manifest.json"),
        {
            "command": command,
            "config": config,
            "versions": {
                "qutil": __version__,
                "numpy": numpy.__version__,
                "python": platform.python_version(),
            },
        },
    )


def _pop_runtime(doc: dict) -> dict:
    """Split wall-clock info out of a response so artifacts stay deterministic."""
    return doc.pop("runtime", {})


@click.group()
@click.option("--server", default=None, help="Remote service URL (default: in-process).")
@click.option(
    "--output",
    "-o",
    default="qutil-out",
    show_default=True,
    help="Artifact output directory.",
)
@click.pass_context
def main(ctx, server, output):
    """Benchmark harness for quantum-utility assessment."""
    ctx.ensure_object(dict)
    ctx.obj["client"] = ServiceClient(server)
    ctx.obj["out"] = output


@main.command()
@click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default="md")
@click.pass_context
def survey(ctx, fmt):
    """Emit the built-in eleven-application readiness survey."""
    doc = ctx.obj["client"].call("get", "/survey")
    out = ctx.obj["out"]
    _write_json(os.path.join(out, "survey.json"), {"rows": doc["rows"], "provenance": doc["provenance"]})
    _write_text(os.path.join(out, "survey.md"), doc["markdown"])
    _write_text(os.path.join(out, "survey.csv"), doc["csv"])
    _write_manifest(out, "survey", {"format": fmt})
    click.echo({"md": doc["markdown"], "csv": doc["csv"], "json": json.dumps({"rows": doc["rows"]}, sort_keys=True, indent=2)}[fmt])


@main.command()
@click.option("--performance", type=float, required=True)
@click.option("--runtime", "runtime_seconds", type=float, required=True)
@click.option("--power", "power_watts", type=float, required=True)
@click.option("--volume", "volume_liters", type=float, default=None)
@click.pass_context
def score(ctx, performance, runtime_seconds, power_watts, volume_liters):
    """Compute performance-per-joule scores."""
    payload = {
        "performance": performance,
        "runtime_seconds": runtime_seconds,
        "power_watts": power_watts,
    }
    if volume_liters is not None:
        payload["volume_liters"] = volume_liters
    doc = ctx.obj["client"].call("post", "/score", payload)
    out = ctx.obj["out"]
    _write_json(os.path.join(out, "score.json"), {"inputs": payload, **doc})
    summary = [f"# Score", "", f"- score per joule: {doc['score_per_joule']}"]
    if doc.get("score_per_joule_liter") is not None:
        summary.append(f"- score per joule-liter: {doc['score_per_joule_liter']}")
    _write_text(os.path.join(out, "score.md"), "\n".join(summary) + "\n")
    _write_manifest(out, "score", payload)
    click.echo(json.dumps(doc, sort_keys=True))


@main.command()
@click.option("--candidate", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--baseline", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--factor", type=float, default=2.0, show_default=True)
@click.pass_context
def verdict(ctx, candidate, baseline, factor):
    """Head-to-head utility verdict from two run-outcome JSON files."""
    with open(candidate) as fh:
        cand = json.load(fh)
    with open(baseline) as fh:
        base = json.load(fh)
    payload = {"candidate": cand, "baseline": base, "similarity_factor": factor}
    doc = ctx.obj["client"].call("post", "/verdict", payload)
    out = ctx.obj["out"]
    _write_json(
        os.path.join(out, "verdict.json"),
        {k: doc[k] for k in ("comparable", "criteria", "verdict", "inputs")},
    )
    _write_text(os.path.join(out, "verdict.md"), doc["markdown"])
    _write_manifest(out, "verdict", payload)
    click.echo(doc["verdict"])


@main.command("compile")
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--topology", default="all_to_all", show_default=True)
@click.option("--num-physical", type=int, default=None)
@click.option("--one-qubit", default=None, help="Comma-separated native 1q kinds.")
@click.option("--two-qubit", default=None, help="Comma-separated native 2q kinds.")
@click.option("--verify/--no-verify", default=True)
@click.pass_context
def compile_cmd(ctx, circuit_file, topology, num_physical, one_qubit, two_qubit, verify):
    """Compile a circuit JSON file to a native gate set and topology."""
    try:
        with open(circuit_file) as fh:
            circuit = json.load(fh)
    except json.JSONDecodeError as exc:
        click.echo(f"error: malformed circuit file: {exc}", err=True)
        sys.exit(CONFIG_EXIT)
    payload = {
        "circuit": circuit,
        "topology": topology,
        "num_physical": num_physical,
        "one_qubit": one_qubit.split(",") if one_qubit else None,
        "two_qubit": two_qubit.split(",") if two_qubit else None,
        "verify": verify,
    }
    doc = ctx.obj["client"].call("post", "/compile", payload)
    out = ctx.obj["out"]
    _write_json(os.path.join(out, "compiled.json"), doc)
    stats = doc["stats"]
    _write_text(
        os.path.join(out, "compiled.md"),
        "# Compilation\n\n"
        + "\n".join(f"- {k}: {v}" for k, v in sorted(stats.items()))
        + f"\n- equivalent: {doc['equivalent']}\n",
    )
    _write_manifest(out, "compile", {k: v for k, v in payload.items() if k != "circuit"})
    click.echo(json.dumps(stats, sort_keys=True))


@main.group()
def bench():
    """Benchmark runs."""


@bench.command("run")
@click.argument("app_id")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--set", "-s", "overrides", multiple=True, help="key=value config override.")
@click.option("--seed", type=int, default=None)
@click.pass_context
def bench_run(ctx, app_id, config_file, overrides, seed):
    """Run one application benchmark."""
    config: dict = {}
    if config_file:
        with open(config_file) as fh:
            config = json.load(fh)
    for item in overrides:
        if "=" not in item:
            click.echo(f"error: override must be key=value, got {item!r}", err=True)
            sys.exit(CONFIG_EXIT)
        key, value = item.split("=", 1)
        try:
            config[key] = json.loads(value)
        except json.JSONDecodeError:
            config[key] = value
    if seed is not None:
        config["seed"] = seed
    doc = ctx.obj["client"].call("post", "/bench/run", {"app": app_id, "config": config})
    runtime = _pop_runtime(doc)
    out = ctx.obj["out"]
    _write_json(os.path.join(out, f"bench_{app_id}.json"), doc)
    _write_json(os.path.join(out, "timing.json"), runtime)
    lines = [f"# Benchmark: {app_id}", ""]
    lines += [f"- {k}: {v}" for k, v in sorted(doc["results"].items())]
    lines += ["", "## Resources", ""]
    lines += [
        f"- {k}: {doc['profile'][k]}"
        for k in ("circuits_executed", "total_shots", "max_native_depth")
    ]
    for w in doc["warnings"]:
        lines.append(f"- warning: {w}")
    _write_text(os.path.join(out, f"bench_{app_id}.md"), "\n".join(lines) + "\n")
    _write_manifest(out, f"bench run {app_id}", {"app": app_id, "config": config})
    click.echo(json.dumps(doc["results"], sort_keys=True))


def _plot_sweep(path: str, doc: dict):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for column, fit in sorted(doc["fits"].items()):
        pts = fit["samples"]
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            marker="o",
            label=f"{column} ({fit['best_class']})",
        )
    ax.set_xlabel(doc["variable"])
    ax.set_ylabel("count")
    ax.set_yscale("log")
    ax.set_title(f"{doc['app']} resource scaling")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


@main.command()
@click.argument("app_id")
@click.option("--sizes", default=None, help="Comma-separated sweep sizes.")
@click.option("--seed", type=int, default=None)
@click.option("--plot/--no-plot", default=True)
@click.pass_context
def sweep(ctx, app_id, sizes, seed, plot):
    """Sweep problem sizes, fit scaling classes, compare to published row."""
    payload: dict = {"app": app_id}
    if sizes:
        try:
            payload["sizes"] = [int(s) for s in sizes.split(",")]
        except ValueError:
            click.echo(f"error: bad --sizes value {sizes!r}", err=True)
            sys.exit(CONFIG_EXIT)
    if seed is not None:
        payload["seed"] = seed
    doc = ctx.obj["client"].call("post", "/sweep", payload)
    out = ctx.obj["out"]
    _write_json(os.path.join(out, f"sweep_{app_id}.json"), doc)
    cells = doc["row_report"]["cells"]
    lines = [f"# Sweep: {app_id}", "", "| column | published | measured | status |", "|---|---|---|---|"]
    for column, cell in cells.items():
        lines.append(
            f"| {column} | {cell['published']} | {cell['measured_class'] or '-'} | {cell['status']} |"
        )
    _write_text(os.path.join(out, f"sweep_{app_id}.md"), "\n".join(lines) + "\n")
    if plot:
        _plot_sweep(os.path.join(out, f"sweep_{app_id}.svg"), doc)
    _write_manifest(out, f"sweep {app_id}", payload)
    click.echo(
        json.dumps(
            {c: cells[c]["status"] for c in sorted(cells)}, sort_keys=True
        )
    )


@main.command()
@click.option("--sizes", default=None, help="Comma-separated qubit counts.")
@click.option("--layers", type=int, default=1, show_default=True)
@click.option("--p1", type=float, default=0.0, show_default=True)
@click.option("--p2", type=float, default=0.0, show_default=True)
@click.option("--shots", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.pass_context
def mirror(ctx, sizes, layers, p1, p2, shots, seed):
    """Mirror-circuit fidelity benchmark over an ansatz family."""
    payload: dict = {"layers": layers, "p1": p1, "p2": p2, "shots": shots}
    if sizes:
        payload["sizes"] = [int(s) for s in sizes.split(",")]
    if seed is not None:
        payload["seed"] = seed
    doc = ctx.obj["client"].call("post", "/mirror", payload)
    out = ctx.obj["out"]
    _write_json(os.path.join(out, "mirror.json"), doc)
    lines = ["# Mirror benchmark", "", "| size | depth | success |", "|---|---|---|"]
    for r in doc["results"]:
        lines.append(f"| {r['size']} | {r['depth']} | {r['success_probability']} |")
    _write_text(os.path.join(out, "mirror.md"), "\n".join(lines) + "\n")
    _write_manifest(out, "mirror", payload)
    click.echo(json.dumps(doc["results"]))


@main.command()
@click.option(
    "--measured",
    "measured_files",
    multiple=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Sweep artifact JSON files to fold into the report.",
)
@click.pass_context
def report(ctx, measured_files):
    """Render the survey report, optionally with measured sweep results."""
    measured = {}
    for path in measured_files:
        with open(path) as fh:
            sweep_doc = json.load(fh)
        measured[sweep_doc["app"]] = sweep_doc["row_report"]
    doc = ctx.obj["client"].call("post", "/report", {"measured": measured or None})
    out = ctx.obj["out"]
    _write_json(os.path.join(out, "report.json"), doc["document"])
    _write_text(os.path.join(out, "report.md"), doc["markdown"])
    _write_manifest(out, "report", {"measured": sorted(measured)})
    click.echo(doc["markdown"])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the harness service over HTTP."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
