"""
Walking the difficulty ladder
=============================

Difficulty is a 13-rung ladder of componentwise non-decreasing
parameter bundles. Session reports feed a conservative controller:
three consecutive clean sessions to move up one rung, a bad session
moves down one, an opt-out steps down immediately. The level can never
jump more than one rung per decision.
"""

from sonotrain.config import default_ladder
from sonotrain.session import progression_decision

ladder = default_ladder()
print(f"{len(ladder)} rungs; tempo and rare-event rate per rung:")
for i, params in enumerate(ladder.levels):
    bar = "#" * round(params.event_tempo)
    print(f"  L{i:<2d} tempo {params.event_tempo:6.2f}/min "
          f"rare {params.rare_event_rate:4.2f}/min  {bar}")


def report(level, success, opt_outs=0):
    """The slice of a session report the controller actually reads."""
    return {"difficulty_level": level, "success_rate": success,
            "opt_outs": opt_outs, "de_escalated": opt_outs > 0}


# a plausible training arc: a clean streak, a rough day, one opt-out.
# note the quick rebound: the streak at L1 is still in the window, so
# one good session after the regress is enough to move back up
history = []
outcomes = [(0, 0.9), (0, 0.95), (0, 1.0),        # three wins -> advance
            (1, 0.85), (1, 0.9), (1, 0.95),       # again
            (2, 0.30),                            # rough day -> back down
            (1, 0.9),                             # rebound
            (2, 0.8, 1)]                          # opt-out -> step down
level = 0
for entry in outcomes:
    level, success, *rest = entry
    history.append(report(level, success, *rest))
    decision = progression_decision(history)
    arrow = {1: "up", 0: "hold", -1: "down"}[decision.level - level]
    print(f"after L{level} at {success:.2f}: "
          f"{arrow:4s} -> L{decision.level} ({decision.reason})")
