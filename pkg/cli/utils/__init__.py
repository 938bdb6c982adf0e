"""CLI Utilities Module"""
