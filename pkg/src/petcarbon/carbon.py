"""Carbon accounting: country carbon intensity and emission conversion.

Emissions are the exact product energy_kwh x g_per_kwh. The shipped table
(data/carbon_intensity.csv) is a snapshot of public grid-intensity data;
callers can load their own CSV with the same header.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

DEFAULT_COUNTRY = "NL"


class UnknownCountry(KeyError):
    """No intensity row for the requested country (and year)."""


@dataclass(frozen=True)
class CarbonIntensity:
    country: str
    g_per_kwh: float
    year: int

    def __post_init__(self):
        if self.g_per_kwh <= 0:
            raise ValueError("g_per_kwh must be positive")


@dataclass(frozen=True)
class EmissionsReport:
    energy_kwh: float
    country: str
    intensity: CarbonIntensity
    emissions_g: float


class IntensityTable:
    """Immutable (country, year) -> grams CO2eq per kWh lookup."""

    def __init__(self, rows):
        self._rows: dict[tuple[str, int], CarbonIntensity] = {}
        for row in rows:
            key = (row.country, row.year)
            if key in self._rows:
                raise ValueError(f"duplicate intensity row for {key}")
            self._rows[key] = row

    @classmethod
    def from_csv(cls, path) -> "IntensityTable":
        rows = []
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            expected = {"country", "year", "g_per_kwh"}
            if reader.fieldnames is None or set(reader.fieldnames) != expected:
                raise ValueError(
                    f"intensity CSV must have header country,year,g_per_kwh, got {reader.fieldnames}"
                )
            for rec in reader:
                rows.append(
                    CarbonIntensity(
                        country=rec["country"].strip().upper(),
                        year=int(rec["year"]),
                        g_per_kwh=float(rec["g_per_kwh"]),
                    )
                )
        return cls(rows)

    @classmethod
    def bundled(cls) -> "IntensityTable":
        ref = resources.files("petcarbon").joinpath("data/carbon_intensity.csv")
        with resources.as_file(ref) as path:
            return cls.from_csv(path)

    def countries(self):
        return sorted({c for c, _ in self._rows})

    def rows(self):
        return sorted(self._rows.values(), key=lambda r: (r.country, r.year))

    def lookup(self, country: str, year: int | None = None) -> CarbonIntensity:
        """Latest year for the country when ``year`` is None."""
        country = country.upper()
        if year is not None:
            try:
                return self._rows[(country, year)]
            except KeyError:
                raise UnknownCountry(f"no intensity for {country} in {year}") from None
        candidates = [r for (c, _), r in self._rows.items() if c == country]
        if not candidates:
            raise UnknownCountry(f"no intensity data for {country}")
        return max(candidates, key=lambda r: r.year)


def lookup_intensity(country, year=None, table=None) -> CarbonIntensity:
    if table is None:
        table = IntensityTable.bundled()
    return table.lookup(country, year)


def emissions(energy_kwh: float, intensity: CarbonIntensity) -> float:
    """Grams CO2eq for the given energy; exact multiplication."""
    if energy_kwh < 0:
        raise ValueError("energy_kwh must be >= 0")
    return energy_kwh * intensity.g_per_kwh


def emissions_report(energy_kwh, country, year=None, table=None) -> EmissionsReport:
    intensity = lookup_intensity(country, year, table)
    return EmissionsReport(
        energy_kwh=energy_kwh,
        country=intensity.country,
        intensity=intensity,
        emissions_g=emissions(energy_kwh, intensity),
    )
