"""Command-line front door: serve the HTTP service, inspect scans, solve,
replay saved sessions, run bot simulations."""

import argparse
import json
import sys

from . import sim as sim_mod
from .cube import canonical_pose, classify, decode_scan, parse_scan_text
from .errors import GameError
from .session import DEFAULT_CONFIG, GameConfig, GameSession, load, replay
from .solver import solve_full
from .terrain import DEFAULT_TERRAIN_TEXT


def _load_config(path: str | None) -> GameConfig:
    if path is None:
        return DEFAULT_CONFIG
    with open(path) as fh:
        return GameConfig.from_text(fh.read())


def cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionStore, create_app

    store = SessionStore(default_config=_load_config(args.config))
    uvicorn.run(create_app(store), host=args.host, port=args.port, log_level="info")
    return 0


def cmd_new(args) -> int:
    session = GameSession(_load_config(args.config), seed=args.seed)
    doc = session.save()
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_scan(args) -> int:
    with open(args.file) as fh:
        observations = parse_scan_text(fh.read())
    state = decode_scan(observations)
    canonical, pose = canonical_pose(state)
    print(f"perm:   {list(state.perm)}")
    print(f"orient: {list(state.orient)}")
    print(f"stage:  {classify(canonical).value}")
    print(f"pose:   {pose}")
    return 0


def cmd_solve(args) -> int:
    with open(args.file) as fh:
        observations = parse_scan_text(fh.read())
    canonical, _ = canonical_pose(decode_scan(observations))
    plan = solve_full(canonical)
    print(plan.notation())
    print(f"{len(plan.moves)} moves")
    return 0


def cmd_replay(args) -> int:
    with open(args.file) as fh:
        doc = json.load(fh)
    saved = load(doc)
    rebuilt = replay(saved.events, saved.config, session_id=saved.id)
    match = rebuilt.save_json() == saved.save_json()
    print(f"session: {saved.id}")
    print(f"events:  {len(saved.events)}")
    print(f"outcome: {rebuilt.outcome}" + (
        f" ({rebuilt.outcome_reason})" if rebuilt.outcome_reason else ""))
    print(f"replay matches snapshot: {'yes' if match else 'NO'}")
    return 0 if match else 1


def cmd_simulate(args) -> int:
    config = _load_config(args.config)
    if args.policy == "perfect":
        policy = sim_mod.BotPolicy("perfect")
    else:
        policy = sim_mod.BotPolicy("noisy", p_error=args.p)
    report = sim_mod.run(policy, config, seed=args.seed, n_runs=args.runs)
    print(sim_mod.format_report(report))
    if args.out:
        sim_mod.report_to_csv(report, args.out)
        print(f"per-run rows written to {args.out}")
    return 0


def cmd_default_config(args) -> int:
    sys.stdout.write(DEFAULT_TERRAIN_TEXT)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pocketpipes",
        description="pocket-cube + pipe-laying game engine tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--config", default=None, help="scenario config file")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("new", help="create a fresh session save document")
    p.add_argument("--config", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("scan", help="decode a scan file")
    p.add_argument("file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("solve", help="solve a scanned cube")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("replay", help="replay a saved session log")
    p.add_argument("file")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("simulate", help="run bot sessions and report step counts")
    p.add_argument("--policy", choices=("perfect", "noisy"), default="perfect")
    p.add_argument("--p", type=float, default=0.1, help="error probability (noisy)")
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=None, help="CSV output path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("default-config", help="print the shipped scenario config")
    p.set_defaults(func=cmd_default_config)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GameError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
