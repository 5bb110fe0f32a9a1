#!/usr/bin/env python3
"""End-to-end checks of the command-line tool.

Usage: cli_test.py /path/to/rederiv
"""

import json
import subprocess
import sys

BIN = sys.argv[1]
XOR = "((ab)*a)^((abab)*a)"
XOR_DERIVATIVE = (
    "{{1,!1,!b(ab)*a},{1,!1,!bab(abab)*a},"
    "{!1,b(ab)*a,!bab(abab)*a},{!1,!b(ab)*a,bab(abab)*a}}"
)

failures = 0


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check(name, cond, extra=""):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name}" + (f"\n     {extra}" if extra else ""))


def check_run(name, result, code, stdout=None):
    extra = f"exit={result.returncode} stdout={result.stdout!r} stderr={result.stderr!r}"
    ok = result.returncode == code
    if stdout is not None:
        ok = ok and result.stdout == stdout
    check(name, ok, extra)


# --- parse ------------------------------------------------------------------
check_run("parse prints the canonical rendering", run("parse", XOR),
          0, "(ab)*a^(abab)*a\n")
check_run("parse strips redundant parentheses", run("parse", "((a)(b))+((c))"),
          0, "ab+c\n")
r = run("parse", "a+")
check("syntax errors exit 2", r.returncode == 2 and r.stderr.startswith("error:"),
      f"exit={r.returncode} stderr={r.stderr!r}")

# --- null -------------------------------------------------------------------
check_run("null on 1 is true", run("null", "1"), 0, "true\n")
check_run("null on ab+a is false and still exits 0", run("null", "ab+a"),
          0, "false\n")
check_run("null sees through boolean operators", run("null", "!(ab)"),
          0, "true\n")

# --- derive -----------------------------------------------------------------
check_run("clausal derivative of the XOR example",
          run("derive", "--support", "clausal", "--word", "a", XOR),
          0, XOR_DERIVATIVE + "\n")
check_run("unsimplified derivative keeps the units",
          run("derive", "--support", "brzozowski", "--no-simplify",
              "--word", "aa", "a*"),
          0, "0a*+1a*\n")
check_run("antimirov derivative is a set",
          run("derive", "--support", "antimirov", "--word", "a", "a+ab"),
          0, "{1,b}\n")
r = run("derive", "--word", "a")
check("derive requires the expression", r.returncode == 2,
      f"exit={r.returncode}")

# --- closure ----------------------------------------------------------------
check_run("antimirov closure of a*",
          run("closure", "--support", "antimirov", "a*"), 0, "{a*}\n")
r = run("closure", "--support", "brzozowski", "--no-simplify", "--cap", "10", "a*")
check("blown budgets exit 2 with a message",
      r.returncode == 2 and "budget" in r.stderr,
      f"exit={r.returncode} stderr={r.stderr!r}")

# --- match ------------------------------------------------------------------
check_run("the XOR example accepts aba",
          run("match", "--support", "clausal", XOR, "aba"), 0, "true\n")
check_run("the XOR example rejects ab with exit 1",
          run("match", "--support", "clausal", XOR, "ab"), 1, "false\n")
check_run("the empty word matches a*", run("match", "a*", ""), 0, "true\n")

# --- equiv ------------------------------------------------------------------
check_run("equivalent expressions answer true",
          run("equiv", "--upto", "5", "(a+b)*", "(a*b*)*"), 0, "true\n")
r = run("equiv", "a", "b")
check("inequivalent expressions answer false with a witness",
      r.returncode == 1 and r.stdout == 'false\nwitness: "a"\n',
      f"exit={r.returncode} stdout={r.stdout!r}")

# --- afa --------------------------------------------------------------------
r = run("afa", "--support", "clausal", "--base", "BC", "--format", "json", XOR)
doc = json.loads(r.stdout)
check("unpruned XOR automaton has nine states in JSON",
      r.returncode == 0 and len(doc["states"]) == 9
      and sorted(doc["alphabet"]) == ["a", "b"],
      f"exit={r.returncode}")

r = run("afa", "--support", "clausal", "--base", "BC", "--format", "json",
        "--prune-false", XOR)
doc = json.loads(r.stdout)
check("pruning drops the dead state",
      r.returncode == 0 and len(doc["states"]) == 8, f"exit={r.returncode}")

r = run("afa", "--support", "clausal", "--base", "BC", "--format", "dot",
        "--prune-false", XOR)
check("DOT export looks like a digraph",
      r.returncode == 0 and "digraph G" in r.stdout and "doublecircle" in r.stdout,
      f"exit={r.returncode}")

r = run("afa", "--support", "dissimilar", "--base", "BB", "a")
check("text export lists states and transitions",
      r.returncode == 0 and "states: 3" in r.stdout and "q1: 1 (final)" in r.stdout,
      f"exit={r.returncode} stdout={r.stdout!r}")

r = run("afa", "--support", "brzozowski", "--no-simplify", "--cap", "5", "a*")
check("afa honours the state budget", r.returncode == 2 and "budget" in r.stderr,
      f"exit={r.returncode} stderr={r.stderr!r}")

# --- check-laws -------------------------------------------------------------
for support in ("brzozowski", "dissimilar", "antimirov", "clausal"):
    r = run("check-laws", "--support", support, "--samples", "12")
    check(f"support laws hold for {support}",
          r.returncode == 0 and "all support laws hold" in r.stdout
          and r.stdout.startswith("conditions checked:"),
          f"exit={r.returncode} stdout={r.stdout!r}")

# --- argument validation ----------------------------------------------------
r = run("match", "--support", "unknown", "a", "a")
check("unknown support names exit 2", r.returncode == 2, f"exit={r.returncode}")
r = run()
check("a subcommand is required", r.returncode == 2, f"exit={r.returncode}")
r = run("--help")
check("--help exits 0", r.returncode == 0 and "Usage" in r.stdout + r.stderr,
      f"exit={r.returncode}")

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
