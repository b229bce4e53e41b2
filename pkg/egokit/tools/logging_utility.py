import sys

from loguru import logger


class NonEgokitFilter:
    def __init__(self):
        self.module_name = "egokit"

    def __call__(self, record):
        return not record["name"].startswith(self.module_name)


LOG_FORMAT = (
    "<bold><green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <7}</level> | <w>{message}</w></bold>"
)


class LoggingUtility:
    @staticmethod
    def set_logger_file(log_level: str, path: str):
        LoggingUtility.set_logger(log_level)
        custom_filter = NonEgokitFilter()

        logger.add(path, format=LOG_FORMAT, level=log_level, filter="egokit")
        logger.add(path, level=log_level, filter=custom_filter)

    @staticmethod
    def set_logger(log_level: str):
        logger.remove()
        custom_filter = NonEgokitFilter()
        logger.add(sys.stderr, format=LOG_FORMAT, level=log_level, filter="egokit")
        logger.add(sys.stderr, level=log_level, filter=custom_filter)
