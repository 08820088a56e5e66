#!/usr/bin/env python3
"""Print a one-page design report for a CIC decimator configuration.

Usage:
    python3 scripts/design_report.py                 # the (N=2, R=50) benchmark
    python3 scripts/design_report.py -N 4 -R 8 -M 4 --fp 0.004
"""

import argparse

from cicdec import (
    CicConfig,
    alias_attenuation,
    gain,
    magnitude,
    null_frequencies,
    passband_droop,
    required_width,
    to_db,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-N", "--stages", type=int, default=2)
    ap.add_argument("-R", "--rate", type=int, default=50)
    ap.add_argument("-M", "--delay", type=int, default=1)
    ap.add_argument("-B", "--bits", type=int, default=16)
    ap.add_argument("--fp", type=float, default=None,
                    help="passband edge, input-rate normalized (default 1/(4R))")
    args = ap.parse_args()

    cfg = CicConfig(args.stages, args.rate, args.delay, args.bits)
    fp = args.fp if args.fp is not None else 1.0 / (4 * cfg.rate)

    print(f"design       N={cfg.stages} R={cfg.rate} M={cfg.diff_delay} B={cfg.input_bits}")
    print(f"kernel       D = R*M = {cfg.kernel_length}")
    print(f"dc gain      {gain(cfg)}")
    print(f"register     {required_width(cfg)} bits (lossless, full precision)")
    print(f"droop        {passband_droop(cfg, fp):8.4f} dB at fp = {fp:g}")
    print(f"alias rej.   {alias_attenuation(cfg, fp):8.4f} dB worst case")

    nulls = null_frequencies(cfg)
    print(f"nulls        {len(nulls)} in (0, 0.5]: " + ", ".join(f"{f:g}" for f in nulls[:6])
          + (" ..." if len(nulls) > 6 else ""))

    print("\n  f_d        |H| dB")
    for i in range(11):
        f = 0.5 * i / 10
        print(f"  {f:<10.3f} {to_db(magnitude(cfg, f)):9.2f}")


if __name__ == "__main__":
    main()
