import json

import numpy as np

import job_config
from fdalg import AlgElement


def make_config(options={}, **flags):
    '''A job config over the defaults, with `flags` as command-line flags'''
    return job_config.from_object({'options': options}, job_config.DEFAULTS, flags)


def create_file(file_path, contents='', mode='w'):
    with file_path.open(mode, encoding='utf-8') as f:
        f.write(contents)


def create_json_file(file_path, obj):
    create_file(file_path, json.dumps(obj))


def element(algebra, *mats):
    '''An element of `algebra` from one nested list per block'''
    return AlgElement(algebra, tuple(np.array(m, dtype=complex) for m in mats))
