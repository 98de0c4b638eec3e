#!/usr/bin/env python3
# Copyright 2026 The airfleet Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Solves exported MPS models with HiGHS and compares against `airfleet solve`.

Exits 0 when every objective agrees within the tolerance, 1 on a mismatch,
and 77 (skip) when highspy is not installed.
"""

import argparse
import os
import re
import subprocess
import sys
import tempfile


def exact_objective(cli, instance):
    proc = subprocess.run(
        [cli, "solve", "--instance", instance, "--algo", "exact", "--time-budget", "0",
         "--out", os.devnull],
        capture_output=True, text=True, check=False)
    if proc.returncode == 2:
        return None
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    return float(re.search(r"objective_hours=([0-9.eE+-]+)", proc.stderr).group(1))


def milp_objective(highspy, path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.readModel(path)
    h.run()
    status = h.getModelStatus()
    if status == highspy.HighsModelStatus.kInfeasible:
        return None
    if status != highspy.HighsModelStatus.kOptimal:
        raise RuntimeError(f"HiGHS status {h.modelStatusToString(status)}")
    return h.getInfo().objective_function_value


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cli", required=True)
    parser.add_argument("--instances", type=int, default=20)
    parser.add_argument("--max-missions", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--tolerance", type=float, default=1e-6)
    parser.add_argument("extra", nargs="*", help="additional instance files")
    args = parser.parse_args()

    try:
        import highspy
    except ImportError:
        print("highspy not installed; skipping")
        return 77

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        instances = list(args.extra)
        for i in range(args.instances):
            n = 1 + i % args.max_missions
            path = os.path.join(tmp, f"inst{i}.json")
            subprocess.run([args.cli, "gen", "--missions", str(n), "--seed",
                            str(args.seed + i), "--out", path], check=True)
            instances.append(path)
        for i, path in enumerate(instances):
            mps = os.path.join(tmp, f"model{i}.mps")
            subprocess.run([args.cli, "export-mps", "--instance", path, "--out", mps],
                           check=True)
            expected = exact_objective(args.cli, path)
            got = milp_objective(highspy, mps)
            ok = (expected is None and got is None) or (
                expected is not None and got is not None
                and abs(expected - got) <= args.tolerance)
            failures += not ok
            print(f"{'ok  ' if ok else 'FAIL'} {os.path.basename(path)}: "
                  f"exact={expected} milp={got}")
    print(f"{len(instances) - failures}/{len(instances)} models agree")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
