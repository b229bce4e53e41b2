import numpy as np
import pytest

from egokit.errors import MissingColumn, NonMonotonicTime, RaggedRow, NonUniformSampling, UnknownChannel
from .sensor_series import SensorSeries, ingest_csv, read_csv_channels


def write(tmp_path, text: str) -> str:
    path = tmp_path / "series.csv"
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestIngestCsv:
    def test_three_rows_give_three_ticks(self, tmp_path):
        path = write(tmp_path, "t,steer,vel,power\n0.0,0.1,2.0,400\n0.1,0.2,2.0,410\n0.2,0.3,1.9,405\n")

        series = ingest_csv(path, ["steer", "vel", "power"])

        assert len(series) == 3
        assert series.dt == pytest.approx(0.1)
        assert series.channels == ["steer", "vel", "power"]
        assert series.values[2, 1] == 1.9

    def test_channels_follow_schema_order(self, tmp_path):
        path = write(tmp_path, "t,steer,vel,power\n0.0,1,2,3\n0.1,4,5,6\n")

        series = ingest_csv(path, ["power", "steer"])

        assert series.channels == ["power", "steer"]
        assert list(series.values[0]) == [3.0, 1.0]

    def test_missing_column_raises(self, tmp_path):
        path = write(tmp_path, "t,steer,vel\n0.0,1,2\n0.1,4,5\n")

        with pytest.raises(MissingColumn):
            ingest_csv(path, ["steer", "vel", "power"])

    def test_non_monotonic_time_raises(self, tmp_path):
        path = write(tmp_path, "t,steer\n0.0,1\n0.2,2\n0.1,3\n")

        with pytest.raises(NonMonotonicTime):
            ingest_csv(path, ["steer"])

    def test_row_with_extra_field_raises(self, tmp_path):
        path = write(tmp_path, "t,steer,vel\n0.0,1,2\n0.1,4,5,6\n")

        with pytest.raises(RaggedRow):
            ingest_csv(path, ["steer", "vel"])

    def test_row_with_missing_field_raises(self, tmp_path):
        path = write(tmp_path, "t,steer,vel\n0.0,1,2\n0.1,4\n")

        with pytest.raises(RaggedRow):
            ingest_csv(path, ["steer", "vel"])

    def test_non_uniform_sampling_raises(self, tmp_path):
        path = write(tmp_path, "t,steer\n0.0,1\n0.1,2\n0.3,3\n")

        with pytest.raises(NonUniformSampling):
            ingest_csv(path, ["steer"])

    def test_written_series_reads_back(self, tmp_path):
        series = SensorSeries(np.arange(5) * 0.1, ["steer", "vel"], np.arange(10.0).reshape(5, 2) / 3)
        path = str(tmp_path / "out.csv")

        series.to_csv(path)
        loaded = ingest_csv(path, read_csv_channels(path))

        assert loaded.channels == ["steer", "vel"]
        assert np.array_equal(loaded.values, series.values)
        assert np.array_equal(loaded.timestamps, series.timestamps)

    def test_shortest_float_text_is_parsed_exactly(self, tmp_path):
        path = tmp_path / "exact.csv"
        path.write_text("t,steer\n0.0,2.3333333333333335\n0.1,1.0\n0.2,1.0\n0.30000000000000004,1.0\n")

        series = ingest_csv(str(path), ["steer"])

        assert series.values[0, 0] == 2.3333333333333335
        assert series.timestamps[3] == 0.30000000000000004


class TestSensorSeries:
    def test_values_are_read_only(self):
        series = SensorSeries([0.0, 1.0], ["a"], np.array([[1.0], [2.0]]))

        with pytest.raises(ValueError):
            series.values[0, 0] = 5

    def test_unknown_column_raises(self):
        series = SensorSeries([0.0, 1.0], ["a"], np.array([[1.0], [2.0]]))

        with pytest.raises(UnknownChannel):
            series.column("b")
