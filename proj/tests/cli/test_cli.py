"""CLI behaviour and cross-checks against the Python oracles.

usage: test_cli.py <turanl2 binary> <oracle dir>
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

BIN = os.path.abspath(sys.argv[1])
sys.path.insert(0, os.path.abspath(sys.argv[2]))

import census_naive  # noqa: E402
import closed_forms  # noqa: E402
import simplex  # noqa: E402

FAILURES = []


def run(*args, cwd=None, env=None):
    return subprocess.run([BIN, *args], cwd=cwd, env=env, capture_output=True, text=True)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        FAILURES.append(what)


def report(*args, cwd=None):
    p = run(*args, "--json", cwd=cwd)
    check(p.returncode == 0, f"exit 0: {' '.join(args)}")
    return json.loads(p.stdout)


def main():
    with tempfile.TemporaryDirectory() as tmp:
        t = Path(tmp)

        p = run("construct", "--type", "C", "--sizes", "2,2,2", cwd=tmp)
        check(p.returncode == 0 and (t / "c6.h3").exists() and (t / "c6.p3").exists(), "construct writes c6.h3 + c6.p3")
        r = report("norm", "--input", "c6.h3", cwd=tmp)
        check(r["l2"] == "120" and r["identity_holds"], "norm of C6 is 120 with the S2 identity")

        p = run("construct", "--sweep", "9", cwd=tmp)
        rows = list(csv.DictReader(io.StringIO(p.stdout)))
        ok = len(rows) == 55 and all(Fraction(row["l2"]) == closed_forms.closed(int(row["n1"]), int(row["n2"]), int(row["n3"])) for row in rows)
        check(ok, "sweep CSV matches the oracle closed form at n = 9")
        for sizes in [(2, 1, 1), (4, 2, 1), (3, 3, 3)]:
            n, edges = closed_forms.build_c(*sizes)
            r = report("construct", "--sizes", ",".join(map(str, sizes)), "--output", str(t / "tmpc"), cwd=tmp)
            check(r["edges"] == len(edges) and r["l2"] == str(closed_forms.l2(n, edges)), f"construct {sizes} matches brute force")

        for n in (4, 5):
            best, raw, classes, _ = census_naive.k43_census(n)
            r = report("census", "--problem", "k43", "--n", str(n))["census"]
            check(r["optimum"] == str(best) and r["extremal_classes"] == classes, f"k43 census n={n} matches oracle")
            r = report("census", "--problem", "k43", "--n", str(n), "--exhaustive")["census"]
            check(r["raw_maximizers"] == str(raw), f"k43 naive scan n={n} raw count matches oracle")
        for n in (1, 2):
            be, ce, bl, cl = census_naive.mantel(n)
            r = report("mantel", "--n", str(n))["census"]
            check(r["optimum"] == str(be) and r["raw_maximizers"] == str(ce), f"mantel edges n={n} matches oracle")
            r = report("mantel", "--n", str(n), "--objective", "l2")["census"]
            check(r["optimum"] == str(bl) and r["raw_maximizers"] == str(cl), f"mantel l2 n={n} matches oracle")
            best, cnt = census_naive.tripartite(n)
            r = report("census", "--problem", "tripartite", "--n", str(n))["census"]
            check(r["optimum"] == str(best) and r["raw_maximizers"] == str(cnt), f"tripartite n={n} matches oracle")

        worst, arg, _ = simplex.sweep(30)
        r = report("ineq", "--resolution", "30")
        check(Fraction(int(r["worst_margin_num"]), int(r["worst_margin_den"])) == worst and tuple(r["argmin"]) == arg,
              "ineq d=30 matches the oracle sweep")

        # Reproducibility: identical config gives byte-identical reports, across worker counts too.
        a = run("check", "--suite", "2,9", "--seed", "7", "--json").stdout
        b = run("check", "--suite", "2,9", "--seed", "7", "--json", "--workers", "3").stdout
        check(a == b and '"seed": "7"' in a and "mt19937_64" in a, "check reports are byte-identical and record the seed")
        env = dict(os.environ, TURANL2_WORKERS="2")
        c = run("check", "--suite", "2,9", "--seed", "7", "--json", env=env).stdout
        check(a == c, "TURANL2_WORKERS does not change the report")
        d = run("check", "--suite", "2", "--seed", "8", "--json").stdout
        check('"seed": "8"' in d, "seed is recorded")

        # Improvement trace.
        (t / "h.h3").write_text((t / "c6.h3").read_text())
        lines = (t / "h.h3").read_text().split("\n")
        n, m = map(int, lines[0].split())
        body = [ln for ln in lines[1:] if ln.strip() and ln.split() != ["0", "2", "4"]]
        body.append("0 1 4")
        (t / "h.h3").write_text(f"{n} {len(body)}\n" + "\n".join(body) + "\n")
        p = run("improve", "--input", "h.h3", "--partition", "c6.p3", "--output", "trace.jsonl", "--graph-out", "out.h3", cwd=tmp)
        check(p.returncode == 0, "improve exits 0")
        trace = [json.loads(x) for x in (t / "trace.jsonl").read_text().splitlines()]
        check(trace[0]["command"] == "improve" and "summary" in trace[-1], "trace has header and summary lines")
        check(trace[-1]["summary"]["steps"] == len(trace) - 2, "one JSONL line per toggle")

        # Symmetrize.
        (t / "g.cg").write_text("5\n11123\n3\n0 3\n1 3\n2 4\n")
        p = run("symmetrize", "--input", "g.cg", "--output", "s.cg", "--json", cwd=tmp)
        r = json.loads(p.stdout)
        check(p.returncode == 0 and (t / "s.cg").exists() and all(f["pass"] for f in r["facts"]), "symmetrize passes its fact checks")

        # Usage errors exit 2.
        for args in (["frobnicate"], ["construct", "--sizes", "1,x"], ["norm"], ["census", "--problem", "k43"],
                     ["improve", "--input", "c6.h3", "--partition", "c6.p3", "--delta4", "1/0"],
                     ["census", "--problem", "k43", "--n", "12"], ["norm", "--input", "missing.h3"]):
            p = run(*args, cwd=tmp)
            check(p.returncode == 2, f"usage error exits 2: {' '.join(args)}")
        (t / "bad.h3").write_text("3 1\n0 1 9\n")
        check(run("norm", "--input", "bad.h3", cwd=tmp).returncode == 2, "malformed .h3 exits 2")

    print(f"{len(FAILURES)} failures")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
