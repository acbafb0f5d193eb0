__package__ = 'chamberkit'
