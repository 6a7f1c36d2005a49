"""
Logging that coexists with the progress bars of long encrypt/decrypt runs.
"""

import logging
from tqdm import tqdm

class LoggingStreamHandler(logging.StreamHandler):
    """Emit records through `tqdm.write`, so an active bar is redrawn below them."""
    def emit(self, record):
        msg = self.format(record)
        tqdm.write(msg)

def install_handler(logger_name, level):
    """
    Attach a `LoggingStreamHandler` to `logger_name` (once) and set its level.
    Returns the logger.
    """
    logger = logging.getLogger(logger_name)
    if not any(isinstance(h, LoggingStreamHandler) for h in logger.handlers):
        handler = LoggingStreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s [%(name)s] %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger
