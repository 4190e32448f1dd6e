# Copyright 2026 The Authors.
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

"""Exchange properties of matroid bases, with checkable certificates."""

from exmat._exmat import (
    DomainError,
    Error,
    InvariantViolation,
    Matroid,
    ParseError,
    PreconditionError,
    all_bases,
    bijection_search,
    check_axioms,
    exchange_search,
    limit_witness,
    max_admissible_k,
    partition_exchange,
    run_cli,
    serial_order,
    subset_bijection,
    symmetric_exchange,
    verify_forced_prefix,
)

__all__ = [
    "DomainError",
    "Error",
    "InvariantViolation",
    "Matroid",
    "ParseError",
    "PreconditionError",
    "all_bases",
    "bijection_search",
    "check_axioms",
    "exchange_search",
    "limit_witness",
    "max_admissible_k",
    "partition_exchange",
    "run_cli",
    "serial_order",
    "subset_bijection",
    "symmetric_exchange",
    "verify_forced_prefix",
]
