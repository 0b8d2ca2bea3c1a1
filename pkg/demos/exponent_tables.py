"""Print restricted root data and integrability exponents for the six markings."""

from __future__ import annotations

from liebranch.dualpair import FIRST_FAMILY, PRESETS, SECOND_FAMILY, ambient_exponent, restricted_exponent, restricted_root_data


def main() -> None:
    print(f"{'marking':<16}{'type':<6}{'mults':<10}{'centralizer':<14}p")
    for name in FIRST_FAMILY + SECOND_FAMILY:
        d = restricted_root_data(PRESETS[name])
        mults = f"{d.long_mult if d.long_mult is not None else '-'},{d.short_mult}"
        cent = " x ".join(map(str, d.centralizer_type))
        print(f"{str(PRESETS[name]):<16}{str(d.identified_type):<6}{mults:<10}{cent:<14}{restricted_exponent(PRESETS[name]).p}")
    print("p_H:", ", ".join(str(ambient_exponent(x)) for x in ("E6", "E7", "E8")))


if __name__ == "__main__":
    main()
