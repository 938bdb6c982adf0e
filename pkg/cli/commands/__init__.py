"""CLI Commands Module"""
