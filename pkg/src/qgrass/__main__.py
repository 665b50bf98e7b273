from qgrass.cli import main

main()
