from typing import Final, Text

VERSION: Final[Text] = "0.1.0"
