import logging
from collections.abc import Iterator

import pytest
from loguru import logger

from pyfixpoint.log.config import console_filter, isolated_logging, log_level_for
from pyfixpoint.log.intercept import InterceptHandler


@pytest.fixture
def captured() -> Iterator[list[tuple[str, str]]]:
    records: list[tuple[str, str]] = []
    sink = logger.add(lambda m: records.append((m.record["level"].name, m.record["message"])), level=0)
    handler = InterceptHandler()
    root = logging.getLogger()
    root.addHandler(handler)
    yield records
    root.removeHandler(handler)
    logger.remove(sink)


def test_stdlib_records_reach_loguru(captured: list[tuple[str, str]]):
    logging.getLogger("pyfixpoint.test").warning("p4 fails at %s", (0, 1, 2))
    assert ("WARNING", "p4 fails at (0, 1, 2)") in captured


def test_library_chatter_is_demoted(captured: list[tuple[str, str]]):
    lib = logging.getLogger("somelib")
    lib.setLevel(logging.INFO)
    lib.info("loaded")
    assert ("DEBUG", "loaded") in captured


def test_console_filter_follows_the_context():
    seen: list[bool] = []
    sink = logger.add(lambda m: seen.append(console_filter(m.record)), level=0)
    try:
        logger.debug("hidden")
        with isolated_logging(log_level_for(verbose=True)):
            logger.debug("shown")
    finally:
        logger.remove(sink)
    assert seen == [False, True]
