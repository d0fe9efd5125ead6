#!/usr/bin/env python3
"""Writes one audit scenario per listed hyperspecial (psi, Q) pair, ranks up to 8.

Usage: gen_family_scenarios.py EUPHOTIC_BINARY OUTPUT_DIR
"""
import json
import pathlib
import re
import subprocess
import sys

RANKS = {"A": range(1, 9), "B": range(2, 9), "C": range(3, 9), "D": range(4, 9)}


def slug(label):
    return re.sub(r"[^0-9a-z]+", "-", label.lower().replace("+", "p").replace("^", "e")).strip("-")


def main(binary, out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for family, ranks in RANKS.items():
        for rank in ranks:
            report = json.loads(subprocess.run(
                [binary, "classify", "--type", family, "--rank", str(rank)],
                check=True, capture_output=True, text=True).stdout)
            for block in report["ranks"]:
                for pair in block["pairs"]:
                    if pair["status"] != "listed":
                        continue
                    name = f"{family.lower()}{rank}_{slug(pair['psi'])}_{slug(pair['q'])}"
                    doc = {
                        "name": name,
                        "cite": pair["cite"],
                        "group": {"type": family, "rank": rank, "lattice": "simply_connected"},
                        "facet_P": {"J": list(range(1, rank + 1))},
                        "facet_Q": {"J": pair["q_levi"], "label": pair["q"]},
                        "psi": {"label": pair["psi"], "toral": {"levi": pair["psi_levi"]}},
                        "chi": "symbolic-generic",
                    }
                    (out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
