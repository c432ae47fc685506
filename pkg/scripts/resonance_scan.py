"""Scan base primes for resonant partners and tally order-structure links.

For each base prime p the script scores a correlation row against its own
baseline, collects the resonant partners q, and checks how often the pair
carries a divisibility link (q | p-1, p | q-1, or a shared predecessor
beyond 2).  The tail of the run prints the aggregate: if resonances were
unrelated to the order structure, linked pairs should appear at roughly
the background rate.

Usage:
    python scripts/resonance_scan.py --bases 19,29,317
    python scripts/resonance_scan.py --base-count 60 --z 3.5 --out scan.csv
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import zetalab as zl
from zetalab.correlation import CorrelationConfig
from zetalab.output import fmt_real, write_csv


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--zeros-file", default=None,
                    help="ordinate table (default: bundled 1000-zero fixture)")
    ap.add_argument("--zeros", type=int, default=1000)
    ap.add_argument("--primes", type=int, default=100,
                    help="comparison pool: the first K primes")
    ap.add_argument("--bases", default=None,
                    help="comma-separated base primes to scan")
    ap.add_argument("--base-count", type=int, default=25,
                    help="scan the first K odd primes when --bases is unset")
    ap.add_argument("--floor", type=int, default=50)
    ap.add_argument("--z", type=float, default=3.0)
    ap.add_argument("--out", default=None, help="CSV of all resonant pairs")
    return ap.parse_args()


def linked(r, p):
    if r.q_divides_p_minus_1 or r.p_divides_q_minus_1:
        return True
    return bool(r.shared_predecessors - {2})


def main():
    args = parse_args()
    path = args.zeros_file or zl.fixture_path()
    table = zl.load_zero_table(path, limit=args.zeros)
    cfg = CorrelationConfig(zero_count=len(table),
                            small_prime_floor=args.floor,
                            resonance_z=args.z)
    pool = zl.first_primes(args.primes)
    if args.bases:
        bases = [int(x) for x in args.bases.split(",")]
    else:
        bases = [p for p in pool if p > 2][:args.base_count]

    rows_out = []
    hits = links = 0
    for p in bases:
        row = zl.correlation_row(table, p, pool, cfg)
        report = zl.detect_resonances(row, p, cfg)
        for r in report.resonant():
            hits += 1
            links += linked(r, p)
            shared = ";".join(str(q) for q in sorted(r.shared_predecessors))
            tag = []
            if r.q_divides_p_minus_1:
                tag.append("q|p-1")
            if r.p_divides_q_minus_1:
                tag.append("p|q-1")
            print(f"p={p:<5d} q={r.q:<5d} c={fmt_real(r.c_value):<15s} "
                  f"z={fmt_real(r.z_score):<8s} "
                  f"q-1={zl.factor_string(r.q - 1):<14s} "
                  f"shared={shared or '-'} {' '.join(tag)}")
            rows_out.append((p, r.q, r.c_value, r.z_score,
                             zl.factor_string(r.q - 1), shared))

    # background rate: linked fraction over every scanned (p, q) pair
    total = bg_links = 0
    for p in bases:
        for q in pool:
            if q == p:
                continue
            total += 1
            shared = zl.poset_predecessors(p) & zl.poset_predecessors(q)
            if (zl.is_poset_related(q, p) or zl.is_poset_related(p, q)
                    or shared - {2}):
                bg_links += 1

    print(f"\nscanned {len(bases)} base primes x {len(pool)} partners, "
          f"N={len(table)}, z>={fmt_real(args.z)}")
    print(f"resonant pairs: {hits}; with an order-structure link: {links}")
    if hits and total:
        print(f"linked fraction {links / hits:.2f} among resonant vs "
              f"{bg_links / total:.2f} background")
    if args.out:
        write_csv(args.out, ("p", "q", "c", "z", "q_minus_1", "shared"),
                  rows_out)
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
