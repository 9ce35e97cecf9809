#!/usr/bin/env python3
# MIT License
#
# Copyright (c) 2024 sentilib developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
import importlib.resources as pkg_resources
import os
from typing import Iterator, List, Tuple

import yaml
from atomicwrites import atomic_write


class Utils:
    @staticmethod
    def save_to_file(file_path: str, data: str):
        directory = os.path.dirname(file_path)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory, exist_ok=True)

        with atomic_write(
            file_path, overwrite=True, encoding="utf-8", newline=""
        ) as f:
            f.write(data)

    @staticmethod
    def is_yaml_file(file_path: str):
        try:
            with open(file_path, "r", encoding="utf-8") as file:
                # Attempt to load the content as YAML
                yaml_content = yaml.safe_load(file)

                # Check if the loaded content is a dictionary or a list
                if isinstance(yaml_content, (dict, list)):
                    return True
                else:
                    return False

        except yaml.YAMLError:
            # Parsing failed, it's not a YAML file
            return False
        except FileNotFoundError:
            # File not found
            return False

    @staticmethod
    def read_file_contents(file_path: str) -> str:
        if os.path.exists(file_path):
            with open(file_path, "r", encoding="utf-8") as f:
                return f.read()

    @staticmethod
    def iter_table_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
        """
        Iterate over the records of a TAB separated resource.

        Blank lines and lines starting with ``#`` are skipped.

        :param text: file contents
        :type text: str

        :return: ``(line_number, fields)`` pairs with stripped fields
        :rtype: Iterator[Tuple[int, List[str]]]
        """
        for line_number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            yield line_number, [field.strip() for field in line.split("\t")]

    @staticmethod
    def read_resource(name: str) -> str:
        """
        Read a resource bundled in the ``sentilib.data`` package.

        :param name: resource file name
        :type name: str

        :return: file contents
        :rtype: str
        """
        from altmetrics_sentiment.sentilib import data

        return pkg_resources.files(data).joinpath(name).read_text(encoding="utf-8")
