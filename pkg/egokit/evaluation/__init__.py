from .ground_truth import ABNORMAL_CLASSES, GroundTruth, SegmentClass, read_ground_truth
from .roc import RocCurve, accuracy, auc, best_accuracy, roc_curve
from .eval_report import EvalReport, build_report, report_from_dict, select_model, smooth, summary_table
from .report_files import read_report_set, write_report_set, write_roc_csv
