"""
Claim catalog, report models and the shipped claims manifest
"""
