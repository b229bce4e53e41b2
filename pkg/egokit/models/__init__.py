from .model_file import ModelFile, TrainingProvenance, load_model, save_model
from .training_settings import TrainingSettings
from .trainer import train_feature_case
from .anomaly_trace import AnomalyTrace, TRACE_COLUMNS, read_anomaly_trace
