import logging


class LoggerSetup:
    def __init__(self, name: str, level: int = logging.INFO):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)

        if not self.logger.handlers:
            # stderr keeps stdout free for csv/json streams
            console_handler = logging.StreamHandler()
            console_handler.setLevel(logging.DEBUG)

            formatter = logging.Formatter("%(levelname)-7s |   %(message)s")
            console_handler.setFormatter(formatter)

            self.logger.addHandler(console_handler)

    def get_logger(self) -> logging.Logger:
        return self.logger
