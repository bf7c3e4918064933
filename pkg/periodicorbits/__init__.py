"""Arithmetic of periodic orbit counts"""
__version__ = '0.1.0'
