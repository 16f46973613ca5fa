"""Mathematics of the Susa heptagon tablet: sexagesimal arithmetic, ancient
area formulas, regular-polygon constructions and the cut-and-paste
dissection behind the Elamite heptagon formula."""

__version__ = "0.1.0"
