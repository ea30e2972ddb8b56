# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Unit tests of the toolkit modules."""
