import pytest
from hypothesis import given, strategies as st

from petcarbon.carbon import (
    CarbonIntensity,
    EmissionsReport,
    IntensityTable,
    UnknownCountry,
    emissions,
    emissions_report,
    lookup_intensity,
)


@pytest.fixture(scope="module")
def table():
    return IntensityTable.bundled()


class TestLookup:
    def test_reference_values(self, table):
        assert lookup_intensity("NL", 2023, table).g_per_kwh == 268
        assert lookup_intensity("FR", 2023, table).g_per_kwh == 56
        assert lookup_intensity("PL", 2023, table).g_per_kwh == 662

    def test_unknown_country(self, table):
        with pytest.raises(UnknownCountry):
            lookup_intensity("XX", table=table)

    def test_year_defaults_to_latest(self, table):
        assert lookup_intensity("NL", table=table).year == 2023

    def test_case_insensitive(self, table):
        assert lookup_intensity("nl", 2023, table).g_per_kwh == 268


class TestEmissions:
    def test_zero_energy(self, table):
        assert emissions(0.0, table.lookup("NL")) == 0.0

    def test_one_kwh_nl(self, table):
        assert emissions(1.0, table.lookup("NL", 2023)) == 268.0

    def test_half_kwh_pl(self, table):
        assert emissions(0.5, table.lookup("PL", 2023)) == 331.0

    def test_negative_rejected(self, table):
        with pytest.raises(ValueError):
            emissions(-1.0, table.lookup("NL"))

    def test_report_is_exact_product(self, table):
        rep = emissions_report(0.123456789, "FR", table=table)
        assert rep.emissions_g == rep.energy_kwh * rep.intensity.g_per_kwh

    @given(energy=st.floats(min_value=0, max_value=1e6, allow_nan=False))
    def test_proportionality(self, energy):
        intensity = CarbonIntensity(country="NL", g_per_kwh=268, year=2023)
        assert emissions(energy, intensity) == energy * 268

    @given(
        a=st.floats(min_value=1e-12, max_value=1e6),
        b=st.floats(min_value=1e-12, max_value=1e6),
    )
    def test_country_invariance_of_ratios(self, a, b):
        # emissions(a)/emissions(b) == a/b for every country in the table
        for row in IntensityTable.bundled().rows():
            assert emissions(a, row) / emissions(b, row) == pytest.approx(a / b, rel=1e-12)


class TestTable:
    def test_duplicate_rows_rejected(self):
        row = CarbonIntensity(country="NL", g_per_kwh=268, year=2023)
        with pytest.raises(ValueError):
            IntensityTable([row, row])

    def test_nonpositive_intensity_rejected(self):
        with pytest.raises(ValueError):
            CarbonIntensity(country="NL", g_per_kwh=0, year=2023)

    def test_csv_roundtrip(self, tmp_path):
        p = tmp_path / "int.csv"
        p.write_text("country,year,g_per_kwh\nde,2020,400.5\n")
        t = IntensityTable.from_csv(p)
        assert t.lookup("DE").g_per_kwh == 400.5

    def test_bad_header_rejected(self, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("nation,year,g\nNL,2023,268\n")
        with pytest.raises(ValueError):
            IntensityTable.from_csv(p)
