#!/usr/bin/env python3
"""Exercises the jcm-sweep binary: flags, presets, config files, exit codes."""

import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = sys.argv[1]
HEADER = (
    "t,negativity,mutual_entropy,s_atom,s_field,s_joint,"
    "classical_bound,truncation_mass_lost"
)

checks = 0


def run(*args, cwd=None):
    return subprocess.run(
        [BINARY, *args], cwd=cwd, capture_output=True, text=True, timeout=300
    )


def expect(condition, label):
    global checks
    checks += 1
    if not condition:
        print(f"FAIL {label}")
        sys.exit(1)
    print(f"ok   {label}")


def main():
    workdir = Path(tempfile.mkdtemp(prefix="jcm-cli-"))

    out_a = workdir / "a.csv"
    result = run("--preset", "fig1", "--n-points", "9", "--t-end", "2.0",
                 "--output", str(out_a))
    expect(result.returncode == 0, "preset run exits 0")
    lines = out_a.read_bytes().decode().splitlines()
    expect(lines[0] == HEADER, "csv header matches the contract")
    expect(len(lines) == 10, "csv holds header plus one row per grid point")
    first = [float(x) for x in lines[1].split(",")]
    expect(
        first[0] == 0.0 and first[1] == 0.0 and abs(first[2]) < 1e-10,
        "first row starts at zero correlations (up to clamped dust)",
    )

    out_b = workdir / "b.csv"
    run("--preset", "fig1", "--n-points", "9", "--t-end", "2.0", "--output", str(out_b))
    expect(out_a.read_bytes() == out_b.read_bytes(), "identical configs give identical bytes")

    # config file, with a command-line override on top
    config = workdir / "sweep.cfg"
    out_c = workdir / "c.csv"
    config.write_text(
        "# sweep configuration\n"
        "preset = fig2\n"
        "n-points = 5\n"
        "t-end = 1.0\n"
        f"output = {out_c}\n"
    )
    result = run("--config", str(config), "--n-points", "7")
    expect(result.returncode == 0, "config-file run exits 0")
    expect(len(out_c.read_text().splitlines()) == 8, "command line overrides the file")

    result = run("--preset", "fig2", "--n-points", "11", "--t-end", "5.0",
                 "--oracle-check", "--oracle-stride", "5",
                 "--output", str(workdir / "d.csv"))
    expect(result.returncode == 0, "oracle-checked run exits 0")

    # alpha can be given as the modulus or its square
    out_e = workdir / "e.csv"
    out_f = workdir / "f.csv"
    run("--alpha-sq", "5.0", "--n-points", "5", "--t-end", "1.0", "--output", str(out_e))
    run("--alpha", str(5.0**0.5), "--n-points", "5", "--t-end", "1.0",
        "--output", str(out_f))
    expect(out_e.read_bytes() == out_f.read_bytes(), "--alpha-sq matches --alpha")

    expect(run("--preset", "fig9").returncode == 1, "unknown preset exits 1")
    expect(run("--n-points", "1").returncode == 1, "bad grid size exits 1")
    expect(run("--no-such-flag").returncode == 1, "unknown flag exits 1")
    expect(
        run("--alpha", "1", "--alpha-sq", "1").returncode == 1,
        "alpha and alpha-sq are mutually exclusive",
    )
    result = run("--preset", "fig1", "--n-points", "5", "--t-end", "1.0",
                 "--output", "/nonexistent-dir-for-sure/out.csv")
    expect(result.returncode == 3, "unwritable output exits 3")
    expect(run("--help").returncode == 0, "--help exits 0")

    print(f"all {checks} CLI checks passed")


if __name__ == "__main__":
    main()
