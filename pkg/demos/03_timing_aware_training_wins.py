"""Train on faithful timing, deploy into irregular timing, and compare.

An expert crosses a lava-gap gridworld while being interrupted: half of
its decisions persist for three base steps. Its log is rendered two
ways: unprocessed (duration-aware records, trained with the
duration-discounted formulation) and subsampled every second decision
(the timing-destroying stand-in for binning a discrete log). The same
algorithms then face the irregular environment live. This is a
miniature of the full desk study that scripts/run_desk_study.sh runs;
the small budgets here finish in about a minute but the gap is already
visible.
"""

import numpy as np

from orl import dataset as ds
from orl import evalstats as es
from orl import experts as ex
from orl import offline as off


def main():
    log = ds.collect_grid(ex.make_grid_expert(0.75, seed=2), 15000, seed=7)
    variants = {
        "unprocessed": (ds.to_unprocessed(log), "smdp"),
        "subsampled-2": (ds.to_binned_subsample(log, 2), "mdp"),
    }
    print(f"training data: {sum(len(ep.rewards) for ep in log.episodes)} base steps, "
          f"{len(variants['unprocessed'][0].rewards)} decisions")
    print()
    print(f"{'algorithm':<11}{'variant':<14}{'irregular return (iqm over 3 seeds)':>37}")
    scores = {}
    for algo in ("bc", "iql"):
        for name, (ts, formulation) in variants.items():
            means = []
            for seed in (0, 1, 2):
                cfg = off.table_config("grid", algo, formulation, seed=seed,
                                       update_steps=6000, batch_size=64)
                bundle, _ = off.train(cfg, ts)
                run = es.rollout_grid_eval(bundle, "irregular", n_episodes=60, seed=0)
                means.append(run.mean)
            scores[(algo, name)] = float(es.iqm(np.array(means)))
            print(f"{algo:<11}{name:<14}{scores[(algo, name)]:>37.3f}")
    print()
    for algo in ("bc", "iql"):
        edge = scores[(algo, "unprocessed")] - scores[(algo, "subsampled-2")]
        print(f"{algo}: keeping true decision timing is worth {edge:+.3f} per episode here")


if __name__ == "__main__":
    main()
