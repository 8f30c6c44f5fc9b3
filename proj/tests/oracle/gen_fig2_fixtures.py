#!/usr/bin/env python3
"""Independent 50-digit scalar pipeline for the 4-level parity model.

Everything here works on populations only (the model Hamiltonian is diagonal
and both sectors are index sets), so it shares no code path with the C++
library. Run it to regenerate tests/fixtures/fig2_oracle.hpp.
"""
import sys
from pathlib import Path

from mpmath import mp, mpf, exp, log, cosh, sinh

mp.dps = 50

ENERGIES = [mpf(0), mpf("0.1"), mpf("0.2"), mpf(1)]
SECTORS = [[0, 2], [1, 3]]


def gibbs(levels, temp):
    w = [exp(-e / temp) for e in levels]
    z = sum(w)
    return [x / z for x in w], z


def entropy(p):
    return -sum(x * log(x) for x in p if x > 0)


def energy(p):
    return sum(x * e for x, e in zip(p, ENERGIES))


def sector_probs(t0):
    p0, _ = gibbs(ENERGIES, t0)
    return [sum(p0[i] for i in s) for s in SECTORS]


def sector_gibbs(k, temp):
    pops, z = gibbs([ENERGIES[i] for i in SECTORS[k]], temp)
    return pops, z


def s_thermalize(t0, temp):
    probs = sector_probs(t0)
    out = [mpf(0)] * 4
    for k, s in enumerate(SECTORS):
        pops, _ = sector_gibbs(k, temp)
        for i, x in zip(s, pops):
            out[i] = probs[k] * x
    return out


def rel_ent(p, q):
    return sum(a * (log(a) - log(b)) for a, b in zip(p, q) if a > 0)


def ergotropy(p):
    passive = sorted(p, reverse=True)
    return energy(p) - sum(a * e for a, e in zip(passive, sorted(ENERGIES)))


def beta_star(p):
    target = entropy(p)
    lo, hi = mpf(0), mpf(10) ** 6
    for _ in range(400):
        mid = (lo + hi) / 2
        s = entropy(gibbs(ENERGIES, 1 / mid)[0])
        if s > target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def asymptotic(p):
    b = beta_star(p)
    return rel_ent(p, gibbs(ENERGIES, 1 / b)[0]) / b


def point(t0, temp):
    t0, temp = mpf(t0), mpf(temp)
    beta = 1 / temp
    probs = sector_probs(t0)
    rho = s_thermalize(t0, temp)
    omega, _ = gibbs(ENERGIES, temp)
    omega0, _ = gibbs(ENERGIES, t0)
    sec_s = sum(probs[k] * entropy(sector_gibbs(k, temp)[0]) for k in range(2))
    e_ss, e_g, e_0 = energy(rho), energy(omega), energy(omega0)
    rel = rel_ent(rho, omega)
    dss = entropy(omega) - sec_s
    dsb = beta * (e_ss - e_g)
    cost = entropy(rho) - sec_s + rel
    erg = ergotropy(rho)
    asym = asymptotic(rho)
    return {
        "p_even": probs[0], "p_odd": probs[1],
        "rho0": rho[0], "rho1": rho[1], "rho2": rho[2], "rho3": rho[3],
        "e_ss": e_ss, "e_gibbs": e_g, "e_initial": e_0,
        "s_ss": entropy(rho), "s_gibbs": entropy(omega), "s_initial": entropy(omega0),
        "rel_ent": rel, "h_sectors": entropy(probs),
        "delta_s_sys": dss, "delta_s_bath": dsb, "erasure_cost": cost,
        "lambda": (e_ss - e_0) / (e_g - e_0),
        "free_energy_ss": e_ss - entropy(rho) / beta,
        "ergotropy": erg, "beta_star": beta_star(rho), "asymptotic": asym,
    }


def emit(out):
    lines = [
        "// Generated by tests/oracle/gen_fig2_fixtures.py (mpmath, 50 digits). Do not edit.",
        "#pragma once",
        "",
        "namespace stherm::fixtures {",
        "",
    ]

    def const(name, value):
        lines.append(f"inline constexpr double {name} = {mp.nstr(value, 20)};")

    _, z1 = gibbs(ENERGIES, mpf(1))
    const("kZAtT1", z1)
    even, zeven = sector_gibbs(0, mpf(1))
    odd, zodd = sector_gibbs(1, mpf(1))
    const("kZEvenAtT1", zeven)
    const("kZOddAtT1", zodd)
    const("kEvenPopE0AtT1", even[0])
    const("kEvenPopE2AtT1", even[1])
    const("kOddPopE1AtT1", odd[0])
    const("kOddPopE3AtT1", odd[1])
    const("kCoshOne", cosh(1))
    const("kMinusSinhOne", -sinh(1))
    lines.append("")

    for tag, (t0, temp) in {"Cold": ("0.05", "1"), "Hot": ("1", "0.05"),
                            "Mid": ("2", "0.5"), "Passive": ("2", "0.1")}.items():
        lines.append(f"// T0 = {t0}, T = {temp}")
        lines.append(f"struct Point{tag} {{")
        lines.append(f"  static constexpr double t0 = {t0};")
        lines.append(f"  static constexpr double t = {temp};")
        for key, value in point(t0, temp).items():
            lines.append(f"  static constexpr double {key} = {mp.nstr(value, 20)};")
        lines.append("};")
        lines.append("")

    lines.append("}  // namespace stherm::fixtures")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parents[1] / "fixtures" / "fig2_oracle.hpp"
    emit(target)
