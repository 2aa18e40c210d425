# SPDX-FileCopyrightText: 2026-present pyfixpoint contributors
#
# SPDX-License-Identifier: MIT
__version__ = "0.1.0"  # x-release-please-version
