"""Thin command-line client for the counting service.

Every verb serializes its arguments into a service request and prints the
response as JSON (or CSV for tables).  By default the service runs
in-process over an ASGI test transport; point --server or PEAKLAB_SERVER
at a running instance to go over the wire instead.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 resource limit.
"""

import json
import sys

import click
import httpx

from . import __version__
from .cache import CountCache
from .compositions import Composition, composition_to_peakset, is_admissible


def _client(server):
    if server:
        return httpx.Client(base_url=server)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app
    return TestClient(app)


def _request(ctx, path, payload):
    try:
        with _client(ctx.obj["server"]) as client:
            response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(2)
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict) and "code" in detail:
        code, message = detail["code"], detail.get("message", "")
    else:
        code, message = "invalid-input", str(detail)
    click.echo("error: %s" % message, err=True)
    sys.exit(3 if code == "exhaustion-limit" else 2)


def _emit(data):
    click.echo(json.dumps(data, indent=2))


@click.group()
@click.version_option(__version__)
@click.option("--server", envvar="PEAKLAB_SERVER", default=None,
              help="Base URL of a running service; in-process when omitted.")
@click.option("--cache", "cache_path", envvar="PEAKLAB_CACHE", default=None,
              help="Path of the advisory count cache file.")
@click.pass_context
def main(ctx, server, cache_path):
    """Exact counting of permutations by peak set and peak composition."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server
    ctx.obj["cache_path"] = cache_path


def _count_output(n, composition, peakset, count, method):
    return {"n": n, "composition": composition, "peakset": peakset,
            "count": count, "method": method}


@main.command("count")
@click.option("--composition", default=None, help="Comma-separated parts, e.g. 4,3,2.")
@click.option("--peakset", default=None, help="Comma-separated peak positions.")
@click.option("--n", "ambient", type=int, default=None,
              help="Ambient size; required with --peakset.")
@click.option("--method", "methods", multiple=True,
              type=click.Choice(["fast", "brute", "formula"]),
              help="Counting method; repeatable. Defaults to fast.")
@click.pass_context
def cmd_count(ctx, composition, peakset, ambient, methods):
    """Count the permutations with a given peak composition or peak set."""
    methods = list(methods) or ["fast"]
    cache = None
    if ctx.obj["cache_path"] and methods == ["fast"]:
        cache = CountCache(ctx.obj["cache_path"], __version__)
    if cache is not None and composition is not None:
        try:
            c = Composition.from_string(composition)
        except ValueError:
            c = None
        if c is not None:
            hit = cache.get(c)
            if hit is not None:
                peaks = (str(composition_to_peakset(c))
                         if is_admissible(c) else None)
                _emit(_count_output(c.size, str(c), peaks, str(hit), "fast"))
                return
    payload = {"composition": composition, "peakset": peakset,
               "n": ambient, "methods": methods}
    data = _request(ctx, "/count", payload)
    _emit(_count_output(data["n"], data["composition"], data["peakset"],
                        data["count"], data["method"]))
    if not data["agree"]:
        click.echo("error: methods disagree: %s" % data["counts_by_method"],
                   err=True)
        sys.exit(1)
    if cache is not None and data["peakset"] is not None:
        cache.put(Composition.from_string(data["composition"]),
                  int(data["count"]))


@main.command("table")
@click.option("--composition", required=True)
@click.option("--stat", type=click.Choice(["int", "ini", "t"]), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json")
@click.pass_context
def cmd_table(ctx, composition, stat, fmt):
    """Boundary tables (int, ini) or the t vector of a composition."""
    data = _request(ctx, "/table", {"composition": composition, "stat": stat})
    if fmt == "json":
        _emit(data)
        return
    header = ["a\\b"] + [str(b) for b in data["col_labels"]]
    click.echo(",".join(header))
    labels = data["row_labels"] or ["t"]
    for label, row in zip(labels, data["rows"]):
        click.echo(",".join([str(label)] + [str(v) for v in row]))


@main.command("maximal")
@click.option("--n", "n", type=int, required=True)
@click.option("--prune", is_flag=True, default=False)
@click.option("--counts", "include_counts", is_flag=True, default=False)
@click.pass_context
def cmd_maximal(ctx, n, prune, include_counts):
    """Exact maximal compositions of n, with the classified prediction."""
    data = _request(ctx, "/maximal",
                    {"n": n, "prune": prune, "include_counts": include_counts})
    _emit(data)
    ok = (data["verdict"] == "outside-theorem-range"
          or (data["verdict"] == "match"
              and data["max_value"] == data["predicted_value"]))
    if not ok:
        sys.exit(1)


@main.command("verify")
@click.option("--from", "n_from", type=int, required=True)
@click.option("--to", "n_to", type=int, required=True)
@click.option("--prune", is_flag=True, default=False)
@click.pass_context
def cmd_verify(ctx, n_from, n_to, prune):
    """Check the maximality classification on a range of sizes."""
    data = _request(ctx, "/verify",
                    {"from": n_from, "to": n_to, "prune": prune})
    _emit(data)
    if not data["all_match"]:
        sys.exit(1)


@main.command("factorize")
@click.option("--composition", required=True)
@click.pass_context
def cmd_factorize(ctx, composition):
    """Split a composition at its parts equal to 3."""
    _emit(_request(ctx, "/factorize", {"composition": composition}))


@main.command("enumerate")
@click.option("--composition", required=True)
@click.option("--limit", type=int, default=None,
              help="Emit at most this many permutations.")
@click.pass_context
def cmd_enumerate(ctx, composition, limit):
    """List the permutations in a class, lexicographically."""
    _emit(_request(ctx, "/enumerate",
                   {"composition": composition, "limit": limit}))


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def cmd_serve(host, port):
    """Run the counting service over HTTP."""
    import uvicorn
    uvicorn.run("peaklab.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
