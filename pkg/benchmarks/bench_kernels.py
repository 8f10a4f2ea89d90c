"""Compare the compiled and the numpy kernel lanes on the same run.

Usage: python benchmarks/bench_kernels.py [--resolution 64] [--steps 400]
"""

import argparse
import time

from fins.geometry import DesignSpace, rectangle_shape, staggered_boxes
from fins.sim import backend, solver
from fins.sim.conditions import FlowConditions


def one_lane(lane, space, cond, resolution, steps, repeats):
    cfg = solver.SolverConfig(resolution=resolution, backend=lane)
    best = float("inf")
    res = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = solver.run_simulation(space, cond, cfg, n_steps=steps)
        best = min(best, time.perf_counter() - t0)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--resolution", type=int, default=64)
    ap.add_argument("--steps", type=int, default=400)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    boxes = staggered_boxes(1)
    b = boxes[0]
    space = DesignSpace(shapes=[rectangle_shape(*b.center, b.width, b.height)],
                        boxes=boxes)
    cond = FlowConditions(re=100.0, pr=0.05)

    lanes = ["python"]
    if backend.available()["compiled"]:
        lanes.append("compiled")
    else:
        print("compiled lane not built; benchmarking the numpy lane only")

    results = {}
    for lane in lanes:
        elapsed, res = one_lane(lane, space, cond, args.resolution,
                                args.steps, args.repeats)
        results[lane] = (elapsed, res)
        print("%-8s  %8.1f ms total  %7.3f ms/step  (Q=%.6f, Dp=%.6f)"
              % (lane, elapsed * 1e3, elapsed * 1e3 / args.steps, res.q, res.dp))

    if len(results) == 2:
        py, cy = results["python"][0], results["compiled"][0]
        same = (results["python"][1].q == results["compiled"][1].q
                and results["python"][1].dp == results["compiled"][1].dp)
        print("speedup: %.1fx   bit-identical scalars: %s" % (py / cy, same))


if __name__ == "__main__":
    main()
