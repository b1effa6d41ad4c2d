"""Toolkit for almost-embeddable graph families and Hadwiger-number bounds."""
