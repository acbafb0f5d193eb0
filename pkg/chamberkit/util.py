__package__ = 'chamberkit'

import json as pyjson

from typing import Callable, Iterable, List, Optional, TypeVar
from pathlib import Path
from inspect import signature
from functools import wraps
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor


T = TypeVar('T')
R = TypeVar('R')


def enforce_types(func):
    """
    Enforce function arg and kwarg types at runtime using its python3 type hints
    """
    # TODO: check return type as well

    @wraps(func)
    def typechecked_function(*args, **kwargs):
        sig = signature(func)

        def check_argument_type(arg_key, arg_val):
            try:
                annotation = sig.parameters[arg_key].annotation
            except KeyError:
                annotation = None

            if annotation is not None and annotation.__class__ is type:
                if not isinstance(arg_val, annotation):
                    raise TypeError(
                        '{}(..., {}: {}) got unexpected {} argument {}={}'.format(
                            func.__name__,
                            arg_key,
                            annotation.__name__,
                            type(arg_val).__name__,
                            arg_key,
                            str(arg_val)[:64],
                        )
                    )

        # check args
        for arg_val, arg_key in zip(args, sig.parameters):
            check_argument_type(arg_key, arg_val)

        # check kwargs
        for arg_key, arg_val in kwargs.items():
            check_argument_type(arg_key, arg_val)

        return func(*args, **kwargs)

    return typechecked_function


def docstring(text: Optional[str]):
    """attach the given docstring to the decorated function"""
    def decorator(func):
        if text:
            func.__doc__ = text
        return func
    return decorator


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int]=None) -> List[R]:
    """map func over items on a thread pool, results come back in input order"""
    from .config import THREADS

    items = list(items)
    workers = min(threads or THREADS, len(items))
    if workers <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def fraction_str(value: Fraction) -> str:
    """p/q on the wire, plain integers without a denominator"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class ExtendedEncoder(pyjson.JSONEncoder):
    """
    Extended json serializer that renders exact rationals, lattice classes
    and report records
    """

    def default(self, obj):
        cls_name = obj.__class__.__name__

        if isinstance(obj, Fraction):
            return fraction_str(obj)

        elif hasattr(obj, 'to_literal'):
            return obj.to_literal()

        elif hasattr(obj, '_asdict'):
            return obj._asdict()

        elif isinstance(obj, Exception):
            return '{}: {}'.format(obj.__class__.__name__, obj)

        elif isinstance(obj, Path):
            return str(obj)

        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)

        elif cls_name in ('dict_items', 'dict_keys', 'dict_values'):
            return tuple(obj)

        return pyjson.JSONEncoder.default(self, obj)


def to_json(obj, indent: Optional[int]=4, sort_keys: bool=True) -> str:
    return pyjson.dumps(obj, indent=indent, sort_keys=sort_keys, cls=ExtendedEncoder, ensure_ascii=False)
