#!/usr/bin/env python3
"""Drive the sigma-delta -> CIC chain and check that DC levels come back.

A first-order modulator turns each DC level into a +-1 bitstream; the
decimator's steady-state output mean should land on level * gain.
"""

import argparse

from cicdec import OUTPUT_BITS, CicConfig, DecimatorState, SigmaDeltaModulator, gain


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-N", "--stages", type=int, default=2)
    ap.add_argument("-R", "--rate", type=int, default=50)
    ap.add_argument("--bits", type=int, default=20000, help="bitstream length per level")
    args = ap.parse_args()

    cfg = CicConfig(args.stages, args.rate, input_bits=OUTPUT_BITS)
    g = gain(cfg)
    print(f"chain: sigma-delta -> CIC N={cfg.stages} R={cfg.rate} (gain {g})")
    print(f"{'dc level':>10} {'expected':>10} {'recovered':>12} {'error %':>9}")

    for level in (-0.75, -0.5, -0.2, 0.0, 0.2, 0.5, 0.75):
        bits = SigmaDeltaModulator().stream(level, args.bits)
        outs = DecimatorState(cfg).process_block(bits)
        steady = outs[2:]  # skip the fill-in transient
        mean = sum(steady) / len(steady)
        expected = level * g
        err = 100.0 * abs(mean - expected) / g
        print(f"{level:>10.2f} {expected:>10.1f} {mean:>12.2f} {err:>8.3f}%")


if __name__ == "__main__":
    main()
