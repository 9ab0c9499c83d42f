__all__ = [
    "to_json",
    "Enumerator",
    "setup_logging",
    "utcnow",
    "is_prime_power",
    "prime_power_base",
]

import json
import logging
import time
from collections import OrderedDict
from datetime import datetime
from fractions import Fraction
from logging.handlers import RotatingFileHandler

import dateutil.tz as tz
import numpy as np
from sympy import factorint


def custom_json_handler(obj):
    if hasattr(obj, "isoformat"):
        return obj.isoformat()
    elif isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return str(obj)
    elif isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.floating):
        return float(obj)
    elif isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    elif isinstance(obj, (set, frozenset)):
        return sorted(obj)
    elif hasattr(obj, "to_dict"):
        return obj.to_dict()
    else:
        raise TypeError(
            "Object of type %s with value of %s is not JSON serializable"
            % (type(obj), repr(obj))
        )


def to_json(obj):
    return json.dumps(obj, sort_keys=True, indent=4, default=custom_json_handler)


def is_prime_power(n):
    """True for 1 and for p**k; 1 counts since the trivial group is a p-group"""
    return n == 1 or len(factorint(n)) == 1


def prime_power_base(n):
    """the prime p with n = p**k, or None for 1 and non prime powers"""
    factors = factorint(n)
    if len(factors) != 1:
        return None
    return next(iter(factors))


def utcnow():
    """returns a timezone-aware datetime object with the current time in UTC."""
    return datetime.now(tz.tzutc())


class Enumerator(object):
    def __init__(self, *names):
        self._values = OrderedDict((value, value) for value in names)

    def __getattribute__(self, attr):
        try:
            return object.__getattribute__(self, "_values")[attr]
        except KeyError:
            return object.__getattribute__(self, attr)

    def __getitem__(self, item):
        if isinstance(item, int):
            return list(self._values.keys())[item]
        return self._values[item]

    def __iter__(self):
        return iter(self._values.keys())

    def __contains__(self, item):
        return item in self._values

    def __repr__(self):
        return repr(list(self._values.keys()))

    def __len__(self):
        return len(self._values)


def setup_logging(level=logging.INFO, console=False, filename=None):
    LOGGER_FORMAT = "%(asctime)-15s %(levelname)s %(name)s - %(message)s"
    formatter = logging.Formatter(LOGGER_FORMAT)
    formatter.converter = time.gmtime  # log times in UTC
    root = logging.getLogger()
    root.setLevel(level)
    if console:
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        root.addHandler(console_handler)
    if filename:
        file_handler = RotatingFileHandler(
            filename, maxBytes=pow(1024, 2) * 128, backupCount=9
        )
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
    return root
