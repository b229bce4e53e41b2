from .sensor_series import SensorSeries, ingest_csv, read_csv_channels, TIME_COLUMN
from .feature_case import FeatureCase, enumerate_cases, select_feature, channel_symbols
from .generalized import Scaler, GeneralizedSeries, derive_generalized, backward_derivatives
