"""qrecur test package initialization"""
