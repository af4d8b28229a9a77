#!/usr/bin/env python3
"""Play one perfect-bot session verbosely: prints each event as it happens.

Useful for eyeballing the full terrain -> portal -> cube -> checkpoint ->
pipe-laying loop without the browser UI.
"""

import argparse
import random

from pocketpipes import session as session_mod
from pocketpipes import sim


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--p-error", type=float, default=0.0)
    args = parser.parse_args()

    policy = (
        sim.BotPolicy("noisy", args.p_error)
        if args.p_error > 0
        else sim.BotPolicy("perfect")
    )
    session = session_mod.GameSession(
        session_mod.DEFAULT_CONFIG, session_id="demo", seed=args.seed
    )
    bot = sim._Bot(session, policy, random.Random(args.seed))
    bot.play()

    for event in session.events:
        summary = {k: v for k, v in event.payload.items()
                   if k not in ("faces", "observed", "pressures")}
        print(f"{event.seq:4d} t={event.tick:<4d} {event.kind:<13s} {summary}")
    print(f"\noutcome: {session.outcome}"
          + (f" ({session.outcome_reason})" if session.outcome_reason else ""))
    print(f"deviations: {session.deviations}")
    print(f"inventory: {dict(session.terrain.inventory)}")


if __name__ == "__main__":
    main()
