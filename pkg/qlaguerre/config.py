"""Run configuration for the command line tools."""

import configparser
import logging
import os

from .permstats import DEFAULT_CAP
from .sampling import DEFAULT_MAX_RESAMPLES, DEFAULT_SEED

logger = logging.getLogger(__name__)

SECTION = "qlaguerre"
FORMATS = ("text", "json", "csv")

# Environment variable -> Config field
ENVIRONMENT = (("QLAGUERRE_CAP", "cap"),
               ("QLAGUERRE_SEED", "seed"),
               ("QLAGUERRE_SAMPLES", "samples"))

_INTEGER_FIELDS = ("cap", "seed", "samples", "max_resamples", "workers")


class Config(object):
    """Enumeration cap, sampling and output settings.

    :raises ValueError: if a setting is out of range.
    """
    def __init__(self, cap=DEFAULT_CAP, seed=DEFAULT_SEED, samples=20,
                 max_resamples=DEFAULT_MAX_RESAMPLES, output_format="text",
                 output=None, workers=1):
        self.cap = cap
        self.seed = seed
        self.samples = samples
        self.max_resamples = max_resamples
        self.output_format = output_format
        self.output = output
        self.workers = workers
        self.validate()

    def validate(self):
        for field in ("cap", "samples", "max_resamples", "workers"):
            value = getattr(self, field)
            if value < 1:
                raise ValueError("%s must be at least 1, got %d" %
                                 (field, value))
        if self.output_format not in FORMATS:
            raise ValueError("Unknown output format '%s', expected one of %s"
                             % (self.output_format, ", ".join(FORMATS)))

    def as_dict(self):
        return dict((f, getattr(self, f)) for f in _INTEGER_FIELDS +
                    ("output_format", "output"))

    def updated(self, **overrides):
        """A copy with the given fields replaced; ``None`` values are
        ignored.
        """
        values = self.as_dict()
        values.update((k, v) for (k, v) in overrides.items()
                      if v is not None)
        return Config(**values)

    def __eq__(self, other):
        if not isinstance(other, Config):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Config(%s)" % ", ".join(
            "%s=%r" % item for item in sorted(self.as_dict().items()))


def _parse_value(field, text, source):
    if field in _INTEGER_FIELDS:
        try:
            return int(text)
        except ValueError:
            raise ValueError("%s in %s must be an integer, got '%s'" %
                             (field, source, text))
    return text


def read_file(path):
    """Settings from the ``[qlaguerre]`` section of an INI file.

    A missing file, a missing section or an unreadable file give no
    settings.
    """
    parser = configparser.ConfigParser()
    try:
        if not parser.read(path):
            logger.debug("No configuration file at %s", path)
            return dict()
        items = parser.items(SECTION)
    except configparser.Error as err:
        logger.debug("Ignoring configuration in %s: %s", path, err)
        return dict()

    settings = dict()
    for (key, text) in items:
        field = "output_format" if key == "format" else key
        if field not in _INTEGER_FIELDS + ("output_format", "output"):
            logger.warning("Unknown setting '%s' in %s", key, path)
            continue
        settings[field] = _parse_value(field, text, path)
    return settings


def read_environment(environ=None):
    environ = os.environ if environ is None else environ
    return dict((field, _parse_value(field, environ[name], name))
                for (name, field) in ENVIRONMENT if environ.get(name))


def load_config(path=None, environ=None, **overrides):
    """Defaults, then the file, then the environment, then ``overrides``.

    Overrides set to ``None`` leave the lower layers in place.
    """
    config = Config()
    if path is not None:
        config = config.updated(**read_file(path))
    config = config.updated(**read_environment(environ))
    return config.updated(**overrides)
