"""Operator-facing command line: a thin client of the HTTP service.

Every subcommand goes through the service's request/response schema.  By
default the app is mounted in-process (no server needed); pass
``--base-url`` to talk to a running instance instead.

Exit codes: 0 success, 1 failed verification checks, 2 configuration or
schema errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR = 2


def _client(base_url: str | None) -> httpx.Client:
    if base_url:
        return httpx.Client(base_url=base_url, timeout=None)
    # sync client over the ASGI app, no socket involved
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot read config {path}: {exc}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)


def _post(client: httpx.Client, endpoint: str, payload: dict) -> dict:
    response = client.post(endpoint, json=payload)
    if response.status_code == 422:
        # pydantic reports the offending field in detail[].loc
        detail = response.json().get("detail", [])
        for err in detail:
            loc = ".".join(str(p) for p in err.get("loc", []) if p != "body")
            click.echo(f"error: invalid field '{loc}': {err.get('msg')}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    if response.status_code == 400:
        click.echo(f"error: {response.json().get('detail')}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    response.raise_for_status()
    return response.json()


@click.group()
@click.option("--base-url", default=None, help="Talk to a running service instead of in-process.")
@click.pass_context
def main(ctx: click.Context, base_url: str | None) -> None:
    """Exact six-vertex wavefunction evaluation and verification."""
    ctx.obj = base_url


def _eval_command(name: str, endpoint: str, paired: bool):
    @main.command(name=name)
    @click.option("--config", "config_path", required=True, type=click.Path(), help="JSON parameter point.")
    @click.pass_obj
    def cmd(base_url: str | None, config_path: str) -> None:
        payload = _load_config(config_path)
        with _client(base_url) as client:
            body = _post(client, endpoint, payload)
        if paired:
            click.echo(f"oracle  = {body['oracle']}")
            click.echo(f"formula = {body['formula']}")
            if not body["equal"]:
                click.echo("MISMATCH between oracle and formula", err=True)
                sys.exit(EXIT_CHECK_FAILURE)
        else:
            click.echo(body["value"])

    cmd.__doc__ = f"Evaluate via POST {endpoint}."
    return cmd


_eval_command("eval-w", "/eval/w", paired=True)
_eval_command("eval-f", "/eval/f", paired=False)
_eval_command("eval-ow", "/eval/ow", paired=False)
_eval_command("eval-of", "/eval/of", paired=False)
_eval_command("eval-groth", "/eval/groth", paired=False)


@main.command()
@click.option("--config", "config_path", default=None, type=click.Path(), help="JSON sweep spec; flags override.")
@click.option("--seed", type=int, default=None)
@click.option("--trials", type=int, default=None)
@click.option("--max-n", type=int, default=None)
@click.option("--max-N", "max_big_n", type=int, default=None)
@click.option("--out", "out_dir", type=click.Path(), default=None, help="Directory for report.json and summary.csv.")
@click.pass_obj
def verify(base_url, config_path, seed, trials, max_n, max_big_n, out_dir) -> None:
    """Run verification sweeps; exit 0 iff every check passes."""
    payload = _load_config(config_path) if config_path else {}
    for key, value in (
        ("seed", seed), ("trials", trials), ("max_n", max_n), ("max_N", max_big_n)
    ):
        if value is not None:
            payload[key] = value
    with _client(base_url) as client:
        body = _post(client, "/verify", payload)

    reports = body["reports"]
    by_check: dict[str, list[dict]] = {}
    for r in reports:
        by_check.setdefault(r["check_id"], []).append(r)
    for check_id in sorted(by_check):
        group = by_check[check_id]
        ok = all(r["passed"] for r in group)
        status = "PASS" if ok else "FAIL"
        click.echo(f"{status} {check_id} ({len(group)} configs)")
        if not ok:
            for r in group:
                if not r["passed"]:
                    click.echo(f"     witness: {r['witness']} at {r['params']}")

    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(reports, indent=2) + "\n")
        (out / "summary.csv").write_text(body["csv_summary"])
        click.echo(f"wrote {out / 'report.json'} and {out / 'summary.csv'}")

    if not body["passed"]:
        sys.exit(EXIT_CHECK_FAILURE)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
