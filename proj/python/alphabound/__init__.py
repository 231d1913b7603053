# Copyright 2026 The alphabound Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Degree-weighted lower bounds on the independence number.

Rational values come back as fractions.Fraction; values of the form a + b/e
come back as EulerLinear.
"""

from ._alphabound import *  # noqa: F401,F403
from ._alphabound import (  # noqa: F401
    BudgetExceeded,
    ClassError,
    Error,
    EulerLinear,
    Graph,
    ParseError,
)

__version__ = "0.1.0"
