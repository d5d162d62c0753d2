"""Exact verification of hook length formulas for binary trees, 3-ary trees and plane forests."""

__version__ = "0.1.0"
