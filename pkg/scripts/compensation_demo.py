#!/usr/bin/env python3
"""Sweep compensator tap counts and show how flat the cascade gets.

Designs droop-compensation FIRs of increasing length for a CIC config and
reports the residual passband deviation of each cascade, then prints the
final design's taps and a short composite-response table.
"""

import argparse

from cicdec import (
    CicConfig,
    composite_response,
    design_compensator,
    passband_deviation_db,
    passband_droop,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-N", "--stages", type=int, default=2)
    ap.add_argument("-R", "--rate", type=int, default=50)
    ap.add_argument("-M", "--delay", type=int, default=1)
    ap.add_argument("--fp", type=float, default=0.25,
                    help="passband edge at the output rate (default 0.25)")
    ap.add_argument("--max-taps", type=int, default=15)
    args = ap.parse_args()

    cfg = CicConfig(args.stages, args.rate, args.delay)
    raw = passband_droop(cfg, args.fp / cfg.rate)
    print(f"raw droop over [0, {args.fp}] of the output rate: {raw:.4f} dB\n")

    print("taps   passband deviation (dB)")
    fir = None
    for taps in range(1, args.max_taps + 1, 2):
        fir = design_compensator(cfg, taps, args.fp)
        dev = passband_deviation_db(cfg, fir, args.fp)
        print(f"{taps:4d}   {dev:.3e}")

    print(f"\nfinal {len(fir)}-tap design (dc gain {fir.dc_gain():.9f}):")
    for k, t in enumerate(fir.taps):
        print(f"  h[{k:2d}] = {t: .10f}")

    print("\ncomposite response (output-rate axis):")
    curve = composite_response(cfg, fir, 11)
    for g, mag_db, _ in curve.rows():
        marker = "  <- passband" if g <= args.fp else ""
        print(f"  g = {g:<6.3f} {mag_db:9.3f} dB{marker}")


if __name__ == "__main__":
    main()
